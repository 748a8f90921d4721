// Copyright 2026 The gammaq Authors.
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


#include <gtest/gtest.h>

#include "oracles.hpp"

namespace oracle {
namespace {

TEST(Oracle, ClassicalKloostermanSmall) {
  // S(1,1;2) is the single phase 0; S(1,1;3) has phases 1/3 and 2/3.
  EXPECT_EQ(classical_kloosterman(1, 1, 2), (PhaseMultiset{{{0, 1}, 1}}));
  EXPECT_EQ(classical_kloosterman(1, 1, 3), (PhaseMultiset{{{1, 3}, 1}, {{2, 3}, 1}}));
}

TEST(Oracle, GroupOrders) {
  EXPECT_EQ(sl_mod_q_count(2, 2), 6);
  EXPECT_EQ(sl_mod_q_count(2, 6), 144);
  EXPECT_EQ(sl_mod_q_count(3, 2), 168);
  EXPECT_EQ(unipotent_coset_count(2, 5), 1);
  EXPECT_EQ(unipotent_coset_count(3, 2), 2);
  EXPECT_EQ(unipotent_coset_count(4, 3), 81);
}

TEST(Oracle, BallCounts) {
  const auto c = ball_counts(2, 1, 1);
  EXPECT_EQ(c[1], 20);
  EXPECT_EQ(ball_counts(2, 2, 1)[1], 2);
  EXPECT_EQ(ball_counts(2, 3, 1)[1], 1);
}

TEST(Oracle, LiftNorms) {
  const auto m = min_lift_norms(3, 10);
  EXPECT_EQ(m.size(), 24u);
  EXPECT_EQ(m.at({0, 2, 1, 0}), 1);
  EXPECT_EQ(m.at({1, 0, 0, 1}), 1);
}

TEST(Oracle, FlagsAndJordan) {
  EXPECT_EQ(flag_count_f3({2, 1}, 2), 7);
  EXPECT_EQ(flag_count_f3({1, 1, 1}, 2), 21);
  EXPECT_EQ(flag_count_f3({3}, 3), 1);
  EXPECT_EQ(jordan_type({1, 1, 0, 0, 1, 1, 0, 0, 1}, 3, 2), (std::vector<int>{3}));
  EXPECT_EQ(jordan_type({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3, 5), (std::vector<int>{1, 1, 1}));
}

TEST(Oracle, GelfandGraevAverage) {
  const auto r = gelfand_graev_average(2, 5, {{{1, 1}, 4}, {{2}, -1}}, {1});
  EXPECT_TRUE(r.rational);
  EXPECT_EQ(r.numerator, r.denominator);
  const auto t = gelfand_graev_average(3, 2, {{{1, 1, 1}, 1}, {{2, 1}, 1}, {{3}, 1}}, {1, 1});
  EXPECT_EQ(t.numerator, 0);
}

TEST(Oracle, Divisibility) {
  EXPECT_TRUE(divisibility_holds(WeylCase::kWStar, 2, 8, 16));
  EXPECT_FALSE(divisibility_holds(WeylCase::kWStar, 2, 8, 4));
  EXPECT_FALSE(divisibility_holds(WeylCase::kGeneric, 2, 8, 8));
  EXPECT_TRUE(divisibility_holds(WeylCase::kGeneric, 2, 16, 1));
}

}  // namespace
}  // namespace oracle
