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

#include "gammaq/errors.hpp"
#include "gammaq/ffchar/char_table.hpp"
#include "gammaq/ffchar/fp_matrix.hpp"
#include "gammaq/ffchar/gelfand_graev.hpp"
#include "gammaq/ffchar/parabolic.hpp"
#include "oracles.hpp"

namespace gammaq::ffchar {
namespace {

using exactalg::make_rational;

UnipotentClassFunction fn(int n, int p, std::map<Partition, std::int64_t> values) {
  UnipotentClassFunction f;
  f.n = n;
  f.p = p;
  f.values = std::move(values);
  return f;
}

TEST(FpMatrix, Arithmetic) {
  const FpMatrix a = FpMatrix::from_entries(2, 3, {1, 2, 0, 1});
  EXPECT_EQ(a.power(3), FpMatrix::identity(2, 3));
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a * a.inverse(), FpMatrix::identity(2, 3));
  EXPECT_EQ(FpMatrix::from_key(2, 3, a.key()), a);
  EXPECT_EQ(FpMatrix::from_entries(2, 5, {2, 1, 1, 3}).det(), 0);
  EXPECT_EQ(FpMatrix::from_entries(2, 5, {2, 1, 1, 3}).rank(), 1);
  EXPECT_TRUE(a.is_unipotent());
  Budget budget;
  EXPECT_EQ(enumerate_gl(2, 3, budget).size(), 48u);
}

TEST(FpMatrix, JordanTypes) {
  EXPECT_EQ(unipotent_jordan_type(FpMatrix::identity(3, 2)), (Partition{1, 1, 1}));
  EXPECT_EQ(unipotent_jordan_type(FpMatrix::from_entries(3, 2, {1, 1, 0, 0, 1, 1, 0, 0, 1})), (Partition{3}));
  EXPECT_EQ(unipotent_jordan_type(FpMatrix::from_entries(3, 2, {1, 0, 1, 0, 1, 0, 0, 0, 1})), (Partition{2, 1}));
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(parse_partition(partition_to_string({2, 1})), (Partition{2, 1}));
}

TEST(FpMatrix, JordanTypesMatchOracle) {
  Budget budget;
  for (const auto& g : enumerate_gl(3, 2, budget)) {
    if (!g.is_unipotent()) continue;
    std::vector<std::int64_t> e;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e.push_back(g(i, j));
    EXPECT_EQ(unipotent_jordan_type(g), oracle::jordan_type(e, 3, 2));
  }
}

TEST(CharTable, SmallGroups) {
  Budget budget;
  const auto s3 = character_table_oracle(2, 2, budget);
  EXPECT_EQ(s3.classes.size(), 3u);
  auto d = s3.degrees;
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_TRUE(s3.first_orthogonality);
  EXPECT_TRUE(s3.second_orthogonality);
  const auto g3 = character_table_oracle(2, 3, budget);
  EXPECT_EQ(g3.classes.size(), 8u);
  EXPECT_EQ(g3.group_order, 48u);
  for (std::size_t a = 0; a < g3.size(); ++a)
    if (g3.cuspidal[a]) EXPECT_EQ(g3.degrees[a], 2);
}

TEST(CharTable, SumOfSquaredDegrees) {
  Budget budget;
  const auto t = character_table_oracle(3, 2, budget);
  std::int64_t s = 0;
  for (auto d : t.degrees) s += d * d;
  EXPECT_EQ(s, 168);
}

TEST(GelfandGraev, Examples) {
  Budget budget;
  const auto a = gg_sum(fn(2, 5, {{{1, 1}, 4}, {{2}, -1}}), budget);
  ASSERT_TRUE(a.rational);
  EXPECT_EQ(a.sum_value, 1);
  const auto triv = gg_sum(fn(2, 7, {{{1, 1}, 1}, {{2}, 1}}), budget);
  EXPECT_EQ(triv.sum_value, 0);
  const auto b = gg_sum(fn(3, 2, {{{1, 1, 1}, 3}, {{2, 1}, -1}, {{3}, 1}}), budget);
  EXPECT_EQ(b.sum_value, 1);
}

TEST(GelfandGraev, AgreesWithOracleOnTwists) {
  Budget budget;
  const auto chi = cuspidal_unipotent_formula(2, 5);
  for (std::int64_t t = 1; t < 5; ++t) {
    const auto r = gg_sum(chi, budget, {t});
    const auto o = oracle::gelfand_graev_average(2, 5, chi.values, {t});
    ASSERT_TRUE(o.rational);
    EXPECT_EQ(r.sum_value, make_rational(o.numerator, o.denominator));
  }
}

TEST(GelfandGraev, CuspidalDims) {
  EXPECT_EQ(cuspidal_dim(2, 5), 4);
  EXPECT_EQ(cuspidal_dim(3, 2), 3);
  EXPECT_EQ(cuspidal_dim(2, 2), 1);
}

TEST(GelfandGraev, UnipotentValues) {
  Budget budget;
  const std::map<Partition, std::int64_t> gl23{{{1, 1}, 2}, {{2}, -1}};
  EXPECT_EQ(cuspidal_unipotent_char(2, 3, budget).values, gl23);
  const std::map<Partition, std::int64_t> gl32{{{1, 1, 1}, 3}, {{2, 1}, -1}, {{3}, 1}};
  EXPECT_EQ(cuspidal_unipotent_char(3, 2, budget).values, gl32);
  EXPECT_EQ(cuspidal_unipotent_formula(3, 2).values, gl32);
  EXPECT_EQ(cuspidal_unipotent_formula(3, 3).dim(), 16);
}

TEST(Parabolic, FlagCounts) {
  EXPECT_EQ(flag_count(3, {2, 1}, 2), 7);
  EXPECT_EQ(flag_count(2, {1, 1}, 3), 4);
  EXPECT_EQ(flag_count(3, {3}, 5), 1);
  EXPECT_EQ(parabolic_dim_count(3, {2, 1}, 2, {1, 1}), 7);
  EXPECT_EQ(parabolic_dim_count(3, {3}, 2, {4}), 4);
  EXPECT_EQ(gl_order(3, 2), 168);
  Budget budget;
  for (const auto& parts : std::vector<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}})
    for (int p : {2, 3}) {
      EXPECT_EQ(flag_count(3, parts, p), oracle::flag_count_f3(parts, p));
      EXPECT_EQ(flag_count_by_orbits(3, parts, p, budget), oracle::flag_count_f3(parts, p));
    }
}

TEST(Parabolic, PowerDisplay) {
  const auto d = power_display(3, {1, 1, 1}, 2);
  EXPECT_EQ(d.power, 8);
  EXPECT_EQ(d.ratio, make_rational(21, 8));
}

}  // namespace
}  // namespace gammaq::ffchar
