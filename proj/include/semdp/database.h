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

#ifndef SEMDP_DATABASE_H_
#define SEMDP_DATABASE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace semdp {

// Spaces with more databases than this are not enumerated unless the caller
// passes an explicit cap.
inline constexpr uint64_t kDefaultEnumerationCap = uint64_t{1} << 20;

// A database: one symbol index per coordinate.
class Database {
 public:
  Database() = default;
  explicit Database(std::vector<int> entries) : entries_(std::move(entries)) {}

  size_t size() const { return entries_.size(); }
  int operator[](size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  void Set(size_t i, int symbol) { entries_[i] = symbol; }

  friend bool operator==(const Database&, const Database&) = default;
  friend auto operator<=>(const Database&, const Database&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Database& db) {
    return H::combine(std::move(h), db.entries_);
  }

 private:
  std::vector<int> entries_;
};

// D^n with a distinguished default symbol used to blank coordinates.
class DatabaseSpace {
 public:
  static absl::StatusOr<DatabaseSpace> Create(std::vector<std::string> domain,
                                              int n,
                                              absl::string_view default_symbol);
  // Default symbol is the first domain element.
  static absl::StatusOr<DatabaseSpace> Create(std::vector<std::string> domain,
                                              int n);

  const std::vector<std::string>& domain() const { return domain_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }
  int n() const { return n_; }
  int default_index() const { return default_index_; }
  const std::string& default_symbol() const { return domain_[default_index_]; }
  std::optional<int> SymbolIndex(absl::string_view symbol) const;

  // |D|^n, or nullopt when it does not fit in 64 bits.
  std::optional<uint64_t> Count() const;
  bool IsEnumerable(uint64_t cap = kDefaultEnumerationCap) const;
  // All databases in lexicographic order of symbol indices.
  absl::StatusOr<std::vector<Database>> Enumerate(
      uint64_t cap = kDefaultEnumerationCap) const;

  absl::Status Validate(const Database& x) const;
  std::string Format(const Database& x) const;
  absl::StatusOr<Database> Parse(absl::string_view text) const;
  Database Constant(int symbol) const;

  friend bool operator==(const DatabaseSpace&, const DatabaseSpace&) = default;

 private:
  DatabaseSpace(std::vector<std::string> domain, int n, int default_index)
      : domain_(std::move(domain)), n_(n), default_index_(default_index) {}

  std::vector<std::string> domain_;
  int n_ = 0;
  int default_index_ = 0;
};

// All databases at Hamming distance exactly one from `x`, ordered by
// coordinate then symbol.
absl::StatusOr<std::vector<Database>> Neighbors(const DatabaseSpace& space,
                                                const Database& x);

// x with coordinate `i` (1-based) set to the default symbol.
absl::StatusOr<Database> Suppress(const DatabaseSpace& space, const Database& x,
                                  int i);

// Number of positions where x and y differ.
int HammingDistance(const Database& x, const Database& y);

}  // namespace semdp

#endif  // SEMDP_DATABASE_H_
