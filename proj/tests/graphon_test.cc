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

#include "normcheck/graphon.h"

#include <cmath>

#include <gtest/gtest.h>

#include "normcheck/error.h"

namespace normcheck {
namespace {

const StepGraphon kHalves({0.5, 0.5}, {0.2, 0.6, 0.6, 1.0});

TEST(GraphonTest, ValidatesConstruction) {
  EXPECT_THROW(StepGraphon({0.5, 0.4}, {1, 1, 1, 1}), DomainError);  // weights sum
  EXPECT_THROW(StepGraphon({1.0, 0.0}, {1, 1, 1, 1}), DomainError);  // zero weight
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {1, 2, 3, 1}), DomainError);  // asymmetric
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {1, 1, 1}), DomainError);     // shape
  EXPECT_THROW(StepGraphon({1.0}, {NAN}), DomainError);
  EXPECT_NO_THROW(StepGraphon({0.5, 0.5 + 5e-13}, {1, 1, 1, 1}));
}

TEST(GraphonTest, Constants) {
  EXPECT_EQ(constant_graphon(1.0).value(0, 0), 1.0);
  EXPECT_EQ(constant_graphon(0.0).max_value(), 0.0);
  const StepGraphon neg = constant_graphon(-0.5);
  EXPECT_FALSE(neg.is_nonnegative());
}

TEST(GraphonTest, Shift) {
  EXPECT_EQ(shift(constant_graphon(1.0), -1.0).max_value(), 0.0);
  EXPECT_EQ(shift(kHalves, 0.0), kHalves);
  const StepGraphon h({0.5, 0.5}, {0.3, 0.5, 0.5, 0.9});
  const StepGraphon s = shift(h, -0.3);
  EXPECT_TRUE(s.is_nonnegative());
  EXPECT_EQ(s.min_value(), 0.0);
}

TEST(GraphonTest, SeparationFromZero) {
  EXPECT_EQ(separation_from_zero(constant_graphon(1.0))->delta, 1.0);
  EXPECT_EQ(separation_from_zero(kHalves)->delta, 0.2);
  EXPECT_FALSE(separation_from_zero(StepGraphon({0.5, 0.5}, {0, 1, 1, 1})));
}

TEST(GraphonTest, PointwiseAbs) {
  EXPECT_EQ(pointwise_abs(constant_graphon(-1.0)), constant_graphon(1.0));
  EXPECT_EQ(pointwise_abs(kHalves), kHalves);
  EXPECT_EQ(pointwise_abs(StepGraphon({0.5, 0.5}, {0.5, -0.2, -0.2, 0})),
            StepGraphon({0.5, 0.5}, {0.5, 0.2, 0.2, 0}));
}

TEST(GraphonTest, CommonRefinement) {
  const std::vector<StepGraphon> same{kHalves, kHalves};
  EXPECT_EQ(common_refinement(same), same);

  const std::vector<StepGraphon> split{constant_graphon(2.0), kHalves};
  const auto r = common_refinement(split);
  EXPECT_EQ(r[0], StepGraphon({0.5, 0.5}, {2, 2, 2, 2}));
  EXPECT_EQ(r[1], kHalves);

  const std::vector<StepGraphon> cuts{StepGraphon({0.3, 0.7}, {1, 2, 2, 3}), kHalves};
  const auto c = common_refinement(cuts);
  ASSERT_EQ(c[0].blocks(), 3);
  EXPECT_NEAR(c[0].weights()[0], 0.3, 1e-15);
  EXPECT_NEAR(c[0].weights()[1], 0.2, 1e-15);
  EXPECT_NEAR(c[0].weights()[2], 0.5, 1e-15);
  EXPECT_EQ(c[0].weights(), c[1].weights());
  // Block 1 (0.3..0.5) belongs to the first input's second block and the
  // second input's first block.
  EXPECT_EQ(c[0].value(0, 1), 2.0);
  EXPECT_EQ(c[0].value(1, 2), 3.0);
  EXPECT_EQ(c[1].value(0, 1), 0.2);
  EXPECT_EQ(c[1].value(1, 2), 0.6);
}

TEST(GraphonTest, L1Distance) {
  EXPECT_EQ(l1_distance(kHalves, kHalves), 0.0);
  EXPECT_DOUBLE_EQ(l1_distance(constant_graphon(1.0), constant_graphon(0.0)), 1.0);
  const StepGraphon bip({0.5, 0.5}, {0, 1, 1, 0});
  EXPECT_DOUBLE_EQ(l1_distance(bip, constant_graphon(1.0)), 0.5);
  EXPECT_NEAR(l1_distance(StepGraphon({0.3, 0.7}, {1, 0, 0, 1}), constant_graphon(0.0)), 0.58, 1e-15);
}

TEST(GraphonTest, RandomGraphonIsSeeded) {
  EXPECT_EQ(random_graphon(1, 1.0, 1.0, 5), constant_graphon(1.0));
  EXPECT_TRUE(random_graphon(3, 0.0, 1.0, 5).is_nonnegative());
  EXPECT_EQ(random_graphon(2, -1.0, 1.0, 9), random_graphon(2, -1.0, 1.0, 9));
  EXPECT_NE(random_graphon(2, -1.0, 1.0, 9), random_graphon(2, -1.0, 1.0, 10));
  EXPECT_THROW(random_graphon(0, 0.0, 1.0, 1), DomainError);
  EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
}

TEST(GraphonTest, TextFormatRoundTrip) {
  const StepGraphon h = random_graphon(3, -1.0, 2.0, 4);
  EXPECT_EQ(parse_graphon(format_graphon(h)), h);
  const StepGraphon p = parse_graphon("# halves\n2\n0.5 0.5\n1 0.5\n0.5000000001 0\n");
  EXPECT_DOUBLE_EQ(p.value(0, 1), p.value(1, 0));
}

TEST(GraphonTest, ParseErrorsCarryLines) {
  try {
    parse_graphon("2\n0.5 0.5\n1 x\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_graphon("2\n0.5 0.5\n1 0\n1 1\n"), ParseError);  // asymmetric
  EXPECT_THROW(parse_graphon("2\n0.5 0.6\n1 0\n0 1\n"), ParseError);  // weights
  EXPECT_THROW(parse_graphon("1\n1\n1 2\n"), ParseError);             // trailing
  EXPECT_THROW(parse_graphon(""), ParseError);
}

}  // namespace
}  // namespace normcheck
