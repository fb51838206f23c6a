// Copyright 2026 The normcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "normcheck/selftest.h"

#include <gtest/gtest.h>

namespace normcheck {
namespace {

TEST(SelftestTest, QuickRunPassesAndIsReproducible) {
  const auto a = run_selftest({.quick = true, .seed = 5});
  const auto b = run_selftest({.quick = true, .seed = 5});
  ASSERT_EQ(a.size(), 4u);
  for (const auto& s : a) EXPECT_TRUE(s.passed) << s.name << ": " << s.detail;
  EXPECT_EQ(selftest_records(a).str(), selftest_records(b).str());
  EXPECT_EQ(*selftest_records(a).find("selftest.passed"), "true");
  EXPECT_EQ(selftest_records(a).str().find("seconds"), std::string::npos);
}

TEST(SelftestTest, SuiteNames) {
  const auto suites = run_selftest({.quick = true});
  EXPECT_EQ(suites[0].name, "oracle_equivalence");
  EXPECT_EQ(suites[1].name, "normalization");
  EXPECT_EQ(suites[2].name, "derivative");
  EXPECT_EQ(suites[3].name, "symmetry");
  EXPECT_EQ(suites[0].cases, 40);
}

TEST(SelftestTest, OtherSeedsPass) {
  for (std::uint64_t seed : {1u, 99u, 12345u}) {
    EXPECT_TRUE(check_oracle_equivalence(40, seed).passed);
    EXPECT_TRUE(check_perturbation_expansions(10, seed).passed) << check_perturbation_expansions(10, seed).detail;
    EXPECT_TRUE(check_edge_deleted_identity(10, seed).passed);
  }
}

}  // namespace
}  // namespace normcheck
