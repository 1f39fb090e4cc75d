// Copyright 2026 The semdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semdp/json_io.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "semdp/noise.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

absl::Status FieldError(const std::string& path, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("field '", path, "': ", what));
}

absl::StatusOr<json> ParseText(absl::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The library message carries the line and column.
    return absl::InvalidArgumentError(
        absl::StrCat("malformed JSON: ", e.what()));
  }
}

absl::StatusOr<const json*> Field(const json& obj, const std::string& parent,
                                  const char* name) {
  const std::string path =
      parent.empty() ? name : absl::StrCat(parent, ".", name);
  if (!obj.is_object())
    return FieldError(parent.empty() ? "<root>" : parent, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) return FieldError(path, "missing");
  return &*it;
}

// Numbers may be JSON numbers or decimal strings.
absl::StatusOr<double> Number(const json& v, const std::string& path) {
  double out = 0.0;
  if (v.is_number()) {
    out = v.get<double>();
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!absl::SimpleAtod(s, &out)) {
      return FieldError(path, absl::StrCat("'", s, "' is not a number"));
    }
  } else {
    return FieldError(path, "expected a number or decimal string");
  }
  if (!std::isfinite(out)) return FieldError(path, "must be finite");
  return out;
}

absl::StatusOr<double> NumberField(const json& obj, const std::string& parent,
                                   const char* name) {
  ASSIGN_OR_RETURN(const json* v, Field(obj, parent, name));
  return Number(*v, absl::StrCat(parent, ".", name));
}

absl::StatusOr<std::vector<std::string>> StringList(const json& v,
                                                    const std::string& path) {
  if (!v.is_array()) return FieldError(path, "expected a list of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      return FieldError(absl::StrCat(path, "[", i, "]"), "expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

absl::Status Annotate(const absl::Status& s, const std::string& path) {
  if (s.ok()) return s;
  return FieldError(path, s.message());
}

absl::StatusOr<Query> ParseQuery(const json& v, const DatabaseSpace& space,
                                 const std::string& path) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    absl::StatusOr<Query> q;
    if (name == "sum") {
      q = Query::Sum(space);
    } else if (name == "median") {
      q = Query::Median(space);
    } else {
      return FieldError(path, absl::StrCat("unknown query '", name, "'"));
    }
    if (!q.ok()) return Annotate(q.status(), path);
    return q;
  }
  ASSIGN_OR_RETURN(const json* table, Field(v, path, "table"));
  if (!table->is_object())
    return FieldError(path + ".table", "expected an object");
  std::map<Database, double> values;
  for (auto it = table->begin(); it != table->end(); ++it) {
    const std::string entry = absl::StrCat(path, ".table.\"", it.key(), "\"");
    auto x = space.Parse(it.key());
    if (!x.ok()) return Annotate(x.status(), entry);
    ASSIGN_OR_RETURN(double value, Number(it.value(), entry));
    values[*x] = value;
  }
  auto q = Query::Table(space, std::move(values));
  if (!q.ok()) return Annotate(q.status(), path + ".table");
  return q;
}

absl::StatusOr<GeneratorSpec> ParseGenerator(const json& g,
                                             const DatabaseSpace& space) {
  const std::string path = "generator";
  ASSIGN_OR_RETURN(const json* type_field, Field(g, path, "type"));
  if (!type_field->is_string())
    return FieldError("generator.type", "expected a string");
  const std::string type = type_field->get<std::string>();
  auto noise_fields = [&](NoiseKind kind, const char* scale_name,
                          double scale) -> absl::StatusOr<NoiseSpec> {
    double step = scale / 8.0;
    double tail = 1e-12;
    if (g.contains("grid_step")) {
      ASSIGN_OR_RETURN(step, NumberField(g, path, "grid_step"));
    }
    if (g.contains("tail_mass")) {
      ASSIGN_OR_RETURN(tail, NumberField(g, path, "tail_mass"));
    }
    auto spec = NoiseSpec::Create(kind, scale, step, tail);
    if (!spec.ok())
      return Annotate(spec.status(), absl::StrCat(path, ".", scale_name));
    return spec;
  };
  if (type == "randomized_response") {
    ASSIGN_OR_RETURN(double p, NumberField(g, path, "flip_prob"));
    return RandomizedResponseSpec{p};
  }
  if (type == "laplace_sum") {
    ASSIGN_OR_RETURN(double scale, NumberField(g, path, "scale"));
    ASSIGN_OR_RETURN(NoiseSpec noise,
                     noise_fields(NoiseKind::kLaplace, "scale", scale));
    return NoisySumSpec{noise};
  }
  if (type == "gaussian_sum") {
    ASSIGN_OR_RETURN(double sigma, NumberField(g, path, "sigma"));
    ASSIGN_OR_RETURN(NoiseSpec noise,
                     noise_fields(NoiseKind::kGaussian, "sigma", sigma));
    return NoisySumSpec{noise};
  }
  if (type == "ls_laplace") {
    ASSIGN_OR_RETURN(const json* qv, Field(g, path, "query"));
    ASSIGN_OR_RETURN(Query query, ParseQuery(*qv, space, "generator.query"));
    ASSIGN_OR_RETURN(double s, NumberField(g, path, "s"));
    ASSIGN_OR_RETURN(double eps, NumberField(g, path, "epsilon"));
    if (!(s > 0.0) || !(eps > 0.0)) {
      return FieldError("generator", "s and epsilon must be positive");
    }
    ASSIGN_OR_RETURN(NoiseSpec noise,
                     noise_fields(NoiseKind::kLaplace, "s", s / eps));
    return LocalSensitivityLaplaceSpec{std::move(query), s, eps, noise};
  }
  return FieldError("generator.type",
                    absl::StrCat("unknown generator '", type,
                                 "'; expected randomized_response, "
                                 "laplace_sum, gaussian_sum or ls_laplace"));
}

ordered_json GeneratorToJson(const GeneratorSpec& spec,
                             const DatabaseSpace& space) {
  ordered_json g;
  if (const auto* rr = std::get_if<RandomizedResponseSpec>(&spec)) {
    g["type"] = "randomized_response";
    g["flip_prob"] = FormatProbability(rr->flip_prob);
    return g;
  }
  const NoiseSpec* noise = nullptr;
  if (const auto* sum = std::get_if<NoisySumSpec>(&spec)) {
    noise = &sum->noise;
    if (noise->kind == NoiseKind::kLaplace) {
      g["type"] = "laplace_sum";
      g["scale"] = noise->scale;
    } else {
      g["type"] = "gaussian_sum";
      g["sigma"] = noise->scale;
    }
  } else {
    const auto& ls = std::get<LocalSensitivityLaplaceSpec>(spec);
    noise = &ls.noise;
    g["type"] = "ls_laplace";
    switch (ls.query.kind()) {
      case Query::Kind::kSum:
        g["query"] = "sum";
        break;
      case Query::Kind::kMedian:
        g["query"] = "median";
        break;
      case Query::Kind::kTable: {
        ordered_json table = ordered_json::object();
        for (const auto& [x, value] : ls.query.table()) {
          table[space.Format(x)] = value;
        }
        g["query"] = {{"table", table}};
        break;
      }
    }
    g["s"] = ls.sensitivity_bound;
    g["epsilon"] = ls.epsilon;
  }
  g["grid_step"] = noise->grid_step;
  g["tail_mass"] = noise->tail_mass;
  return g;
}

}  // namespace

std::string FormatProbability(double p) { return absl::StrFormat("%.17g", p); }

absl::StatusOr<Mechanism> ParseMechanismJson(absl::string_view text) {
  ASSIGN_OR_RETURN(json root, ParseText(text));
  if (!root.is_object()) return FieldError("<root>", "expected an object");
  ASSIGN_OR_RETURN(const json* domain_field, Field(root, "", "domain"));
  ASSIGN_OR_RETURN(std::vector<std::string> domain,
                   StringList(*domain_field, "domain"));
  ASSIGN_OR_RETURN(const json* n_field, Field(root, "", "n"));
  if (!n_field->is_number_integer() || n_field->get<int64_t>() < 1 ||
      n_field->get<int64_t>() > 1000000) {
    return FieldError("n", "expected a positive integer");
  }
  const int n = n_field->get<int>();
  std::string default_symbol = domain.empty() ? "" : domain.front();
  if (root.contains("default")) {
    if (!root["default"].is_string())
      return FieldError("default", "expected a string");
    default_symbol = root["default"].get<std::string>();
  }
  auto space = DatabaseSpace::Create(domain, n, default_symbol);
  if (!space.ok()) return Annotate(space.status(), "domain");

  const bool has_matrix = root.contains("matrix");
  const bool has_generator = root.contains("generator");
  if (has_matrix == has_generator) {
    return FieldError("<root>",
                      "exactly one of 'matrix' or 'generator' is required");
  }
  std::optional<std::vector<std::string>> labels;
  if (root.contains("transcripts")) {
    ASSIGN_OR_RETURN(labels, StringList(root["transcripts"], "transcripts"));
  }

  if (has_generator) {
    ASSIGN_OR_RETURN(GeneratorSpec spec,
                     ParseGenerator(root["generator"], *space));
    auto m = MakeFromGenerator(*space, spec);
    if (!m.ok()) return Annotate(m.status(), "generator");
    if (labels.has_value() && *labels != m->transcripts().labels()) {
      return FieldError("transcripts",
                        "does not match the generator's transcripts");
    }
    return m;
  }

  if (!labels.has_value()) return FieldError("transcripts", "missing");
  auto transcripts = OutcomeSet::Create(*labels);
  if (!transcripts.ok()) return Annotate(transcripts.status(), "transcripts");
  const json& matrix = root["matrix"];
  if (!matrix.is_object()) return FieldError("matrix", "expected an object");
  std::map<Database, std::vector<double>> rows;
  for (auto it = matrix.begin(); it != matrix.end(); ++it) {
    const std::string path = absl::StrCat("matrix.\"", it.key(), "\"");
    auto x = space->Parse(it.key());
    if (!x.ok()) return Annotate(x.status(), path);
    const json& row = it.value();
    if (!row.is_array() || row.size() != labels->size()) {
      return FieldError(path, absl::StrCat("expected a list of ",
                                           labels->size(), " probabilities"));
    }
    std::vector<double> probs;
    for (size_t t = 0; t < row.size(); ++t) {
      ASSIGN_OR_RETURN(double p,
                       Number(row[t], absl::StrCat(path, "[", t, "]")));
      probs.push_back(p);
    }
    if (!rows.emplace(*std::move(x), std::move(probs)).second) {
      return FieldError(path, "duplicate database");
    }
  }
  auto m = Mechanism::Dense(*std::move(space), *std::move(transcripts),
                            std::move(rows));
  if (!m.ok()) return Annotate(m.status(), "matrix");
  return m;
}

absl::StatusOr<std::string> MechanismToJson(const Mechanism& m) {
  const DatabaseSpace& space = m.space();
  ordered_json root;
  root["domain"] = space.domain();
  root["n"] = space.n();
  root["default"] = space.default_symbol();
  root["transcripts"] = m.transcripts().labels();
  if (const GeneratorSpec* spec = m.generator(); spec != nullptr) {
    root["generator"] = GeneratorToJson(*spec, space);
  } else {
    if (!space.IsEnumerable()) {
      return absl::FailedPreconditionError(
          "mechanism has no generator descriptor and too many rows to write");
    }
    ASSIGN_OR_RETURN(std::vector<Database> all, space.Enumerate());
    ordered_json matrix = ordered_json::object();
    for (const Database& x : all) {
      ASSIGN_OR_RETURN(auto row, m.Row(x));
      ordered_json probs = ordered_json::array();
      for (double p : row->probs) probs.push_back(FormatProbability(p));
      matrix[space.Format(x)] = std::move(probs);
    }
    root["matrix"] = std::move(matrix);
  }
  return root.dump(2) + "\n";
}

absl::StatusOr<BeliefPrior> ParsePriorJson(absl::string_view text,
                                           const DatabaseSpace& space) {
  ASSIGN_OR_RETURN(json root, ParseText(text));
  if (!root.is_array()) {
    return FieldError("<root>", "expected a list of {database, weight}");
  }
  std::vector<Database> support;
  std::vector<double> weights;
  for (size_t i = 0; i < root.size(); ++i) {
    const std::string path = absl::StrCat("[", i, "]");
    ASSIGN_OR_RETURN(const json* db, Field(root[i], path, "database"));
    if (!db->is_string())
      return FieldError(path + ".database", "expected a string");
    auto x = space.Parse(db->get<std::string>());
    if (!x.ok()) return Annotate(x.status(), path + ".database");
    ASSIGN_OR_RETURN(double w, NumberField(root[i], path, "weight"));
    support.push_back(*std::move(x));
    weights.push_back(w);
  }
  auto prior =
      BeliefPrior::Create(space, std::move(support), std::move(weights));
  if (!prior.ok()) return Annotate(prior.status(), "<root>");
  return prior;
}

std::string PriorToJson(const BeliefPrior& prior, const DatabaseSpace& space) {
  ordered_json root = ordered_json::array();
  for (size_t k = 0; k < prior.size(); ++k) {
    ordered_json entry;
    entry["database"] = space.Format(prior.support()[k]);
    entry["weight"] = FormatProbability(prior.weights()[k]);
    root.push_back(std::move(entry));
  }
  return root.dump(2) + "\n";
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, absl::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write '", path, "'"));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out)
    return absl::InternalError(absl::StrCat("write to '", path, "' failed"));
  return absl::OkStatus();
}

}  // namespace semdp
