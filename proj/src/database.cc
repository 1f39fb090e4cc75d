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

#include "semdp/database.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace semdp {

absl::StatusOr<DatabaseSpace> DatabaseSpace::Create(
    std::vector<std::string> domain, int n, absl::string_view default_symbol) {
  if (domain.empty()) {
    return absl::InvalidArgumentError("domain must have at least one symbol");
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("database length must be positive, got ", n));
  }
  for (size_t i = 0; i < domain.size(); ++i) {
    if (domain[i].empty() || domain[i].find(',') != std::string::npos) {
      return absl::InvalidArgumentError(absl::StrCat(
          "domain symbol '", domain[i], "' must be nonempty without commas"));
    }
    for (size_t j = 0; j < i; ++j) {
      if (domain[i] == domain[j]) {
        return absl::InvalidArgumentError(
            absl::StrCat("duplicate domain symbol '", domain[i], "'"));
      }
    }
  }
  auto it = std::find(domain.begin(), domain.end(), default_symbol);
  if (it == domain.end()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "default symbol '", default_symbol, "' is not in the domain"));
  }
  const int default_index = static_cast<int>(it - domain.begin());
  return DatabaseSpace(std::move(domain), n, default_index);
}

absl::StatusOr<DatabaseSpace> DatabaseSpace::Create(
    std::vector<std::string> domain, int n) {
  if (domain.empty()) {
    return absl::InvalidArgumentError("domain must have at least one symbol");
  }
  std::string first = domain.front();
  return Create(std::move(domain), n, first);
}

std::optional<int> DatabaseSpace::SymbolIndex(absl::string_view symbol) const {
  auto it = std::find(domain_.begin(), domain_.end(), symbol);
  if (it == domain_.end()) return std::nullopt;
  return static_cast<int>(it - domain_.begin());
}

std::optional<uint64_t> DatabaseSpace::Count() const {
  uint64_t count = 1;
  const uint64_t base = domain_.size();
  for (int i = 0; i < n_; ++i) {
    if (count > UINT64_MAX / base) return std::nullopt;
    count *= base;
  }
  return count;
}

bool DatabaseSpace::IsEnumerable(uint64_t cap) const {
  auto count = Count();
  return count.has_value() && *count <= cap;
}

absl::StatusOr<std::vector<Database>> DatabaseSpace::Enumerate(
    uint64_t cap) const {
  if (!IsEnumerable(cap)) {
    return absl::FailedPreconditionError(
        absl::StrCat("database space |D|^n with |D|=", domain_.size(),
                     ", n=", n_, " exceeds the enumeration cap ", cap));
  }
  std::vector<Database> out;
  out.reserve(*Count());
  std::vector<int> entries(n_, 0);
  while (true) {
    out.emplace_back(entries);
    int pos = n_ - 1;
    while (pos >= 0 && entries[pos] == domain_size() - 1) {
      entries[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++entries[pos];
  }
  return out;
}

absl::Status DatabaseSpace::Validate(const Database& x) const {
  if (static_cast<int>(x.size()) != n_) {
    return absl::InvalidArgumentError(
        absl::StrCat("database has length ", x.size(), ", expected ", n_));
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= domain_size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("database entry ", i + 1, " is not a domain symbol"));
    }
  }
  return absl::OkStatus();
}

std::string DatabaseSpace::Format(const Database& x) const {
  return absl::StrJoin(x.entries(), ",", [this](std::string* out, int s) {
    out->append(domain_[s]);
  });
}

absl::StatusOr<Database> DatabaseSpace::Parse(absl::string_view text) const {
  std::vector<absl::string_view> parts = absl::StrSplit(text, ',');
  if (static_cast<int>(parts.size()) != n_) {
    return absl::InvalidArgumentError(absl::StrCat(
        "database '", text, "' has ", parts.size(), " entries, expected ", n_));
  }
  std::vector<int> entries;
  entries.reserve(parts.size());
  for (absl::string_view part : parts) {
    auto index = SymbolIndex(part);
    if (!index.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "database '", text, "' has unknown symbol '", part, "'"));
    }
    entries.push_back(*index);
  }
  return Database(std::move(entries));
}

Database DatabaseSpace::Constant(int symbol) const {
  return Database(std::vector<int>(n_, symbol));
}

absl::StatusOr<std::vector<Database>> Neighbors(const DatabaseSpace& space,
                                                const Database& x) {
  if (absl::Status s = space.Validate(x); !s.ok()) return s;
  std::vector<Database> out;
  out.reserve(static_cast<size_t>(space.n()) * (space.domain_size() - 1));
  for (int i = 0; i < space.n(); ++i) {
    for (int s = 0; s < space.domain_size(); ++s) {
      if (s == x[i]) continue;
      Database y = x;
      y.Set(i, s);
      out.push_back(std::move(y));
    }
  }
  return out;
}

absl::StatusOr<Database> Suppress(const DatabaseSpace& space, const Database& x,
                                  int i) {
  if (absl::Status s = space.Validate(x); !s.ok()) return s;
  if (i < 1 || i > space.n()) {
    return absl::OutOfRangeError(
        absl::StrCat("coordinate ", i, " outside [1, ", space.n(), "]"));
  }
  Database out = x;
  out.Set(i - 1, space.default_index());
  return out;
}

int HammingDistance(const Database& x, const Database& y) {
  int d = 0;
  const size_t len = std::min(x.size(), y.size());
  for (size_t i = 0; i < len; ++i) d += (x[i] != y[i]);
  return d + static_cast<int>(std::max(x.size(), y.size()) - len);
}

}  // namespace semdp
