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

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tests/test_util.h"

namespace semdp {
namespace {

using ::semdp::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::SizeIs;

std::vector<std::string> Formatted(const DatabaseSpace& space,
                                   const std::vector<Database>& xs) {
  std::vector<std::string> out;
  for (const Database& x : xs) out.push_back(space.Format(x));
  return out;
}

TEST(DatabaseSpaceTest, Validation) {
  EXPECT_THAT(DatabaseSpace::Create({}, 2),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DatabaseSpace::Create({"a", "a"}, 2),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DatabaseSpace::Create({"a,b"}, 2),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DatabaseSpace::Create({"a"}, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DatabaseSpace::Create({"a", "b"}, 2, "c"),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(DatabaseSpaceTest, DefaultSymbol) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace first,
                       DatabaseSpace::Create({"a", "b"}, 3));
  EXPECT_EQ(first.default_symbol(), "a");
  ASSERT_OK_AND_ASSIGN(DatabaseSpace chosen,
                       DatabaseSpace::Create({"a", "b"}, 3, "b"));
  EXPECT_EQ(chosen.default_index(), 1);
}

TEST(DatabaseSpaceTest, CountAndEnumerationCap) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace small,
                       DatabaseSpace::Create({"0", "1"}, 3));
  EXPECT_EQ(small.Count(), 8u);
  ASSERT_OK_AND_ASSIGN(std::vector<Database> all, small.Enumerate());
  EXPECT_THAT(Formatted(small, all),
              ElementsAre("0,0,0", "0,0,1", "0,1,0", "0,1,1", "1,0,0", "1,0,1",
                          "1,1,0", "1,1,1"));
  ASSERT_OK_AND_ASSIGN(DatabaseSpace huge,
                       DatabaseSpace::Create({"0", "1"}, 500));
  EXPECT_FALSE(huge.Count().has_value());
  EXPECT_FALSE(huge.IsEnumerable());
  EXPECT_THAT(huge.Enumerate(),
              StatusIs(absl::StatusCode::kFailedPrecondition));
  EXPECT_THAT(small.Enumerate(4),
              StatusIs(absl::StatusCode::kFailedPrecondition));
}

TEST(DatabaseSpaceTest, ParseFormatRoundTrip) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"lo", "hi"}, 3));
  ASSERT_OK_AND_ASSIGN(Database x, space.Parse("hi,lo,hi"));
  EXPECT_THAT(x.entries(), ElementsAre(1, 0, 1));
  EXPECT_EQ(space.Format(x), "hi,lo,hi");
  EXPECT_THAT(space.Parse("hi,lo"),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(space.Parse("hi,lo,mid"),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(NeighborsTest, BinaryPair) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1"}, 2));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> ns,
                       Neighbors(space, space.Constant(0)));
  EXPECT_THAT(Formatted(space, ns), ElementsAre("1,0", "0,1"));
}

TEST(NeighborsTest, TernarySingleton) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"a", "b", "c"}, 1));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> ns,
                       Neighbors(space, space.Constant(0)));
  EXPECT_THAT(Formatted(space, ns), ElementsAre("b", "c"));
}

TEST(NeighborsTest, CountIsNTimesDomainMinusOne) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace binary,
                       DatabaseSpace::Create({"0", "1"}, 10));
  for (int k = 0; k < 1024; k += 97) {
    std::vector<int> entries(10);
    for (int i = 0; i < 10; ++i) entries[i] = (k >> i) & 1;
    ASSERT_OK_AND_ASSIGN(std::vector<Database> ns,
                         Neighbors(binary, Database(entries)));
    EXPECT_THAT(ns, SizeIs(10));
    for (const Database& y : ns) {
      EXPECT_EQ(HammingDistance(Database(entries), y), 1);
    }
  }
  ASSERT_OK_AND_ASSIGN(DatabaseSpace five,
                       DatabaseSpace::Create({"0", "1", "2", "3", "4"}, 5));
  ASSERT_OK_AND_ASSIGN(auto ns, Neighbors(five, five.Constant(2)));
  EXPECT_THAT(ns, SizeIs(20));
}

TEST(NeighborsTest, MalformedDatabase) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1"}, 2));
  EXPECT_THAT(Neighbors(space, Database({0, 1, 0})),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(Neighbors(space, Database({0, 2})),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(SuppressTest, SetsDefaultAndIsIdempotent) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1"}, 3));
  ASSERT_OK_AND_ASSIGN(Database x, space.Parse("1,1,1"));
  ASSERT_OK_AND_ASSIGN(Database y, Suppress(space, x, 2));
  EXPECT_EQ(space.Format(y), "1,0,1");
  ASSERT_OK_AND_ASSIGN(Database z, Suppress(space, y, 2));
  EXPECT_EQ(z, y);
}

TEST(SuppressTest, IndexOutOfRange) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1"}, 3));
  EXPECT_THAT(Suppress(space, space.Constant(1), 0),
              StatusIs(absl::StatusCode::kOutOfRange));
  EXPECT_THAT(Suppress(space, space.Constant(1), 4),
              StatusIs(absl::StatusCode::kOutOfRange));
}

}  // namespace
}  // namespace semdp
