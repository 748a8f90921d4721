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

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/kloosterman/enumerators.hpp"
#include "gammaq/kloosterman/kloosterman_set.hpp"
#include "gammaq/kloosterman/laws.hpp"
#include "gammaq/kloosterman/sum.hpp"
#include "oracles.hpp"

namespace gammaq::kloosterman {
namespace {

using bruhat::special_weyl;
using bruhat::weyl_from_name;
using bruhat::WeylKind;
using exactalg::make_rational;

KloostermanQuery classical(std::int64_t m, std::int64_t n, std::int64_t c) {
  return KloostermanQuery::make(2, 1, special_weyl(2, WeylKind::kWLong), {c}, {m}, {n});
}

KloostermanQuery wstar(std::int64_t q, std::int64_t c1, std::int64_t c2) {
  return KloostermanQuery::make(3, q, special_weyl(3, WeylKind::kWStar), {c1, c2}, {1, 1}, {1, 1});
}

PhaseSum from_oracle(const oracle::PhaseMultiset& m) {
  PhaseSum s;
  for (const auto& [ph, mult] : m) s.add(make_rational(ph.first, ph.second), mult);
  return s;
}

KloostermanResult run(const KloostermanQuery& q, Method method = Method::kAuto, std::int64_t height = 0) {
  Budget budget;
  SetOptions options;
  options.method = method;
  options.height = height;
  return kloosterman_sum(q, options, budget);
}

TEST(KloostermanSum, ClassicalExamples) {
  EXPECT_EQ(run(classical(1, 1, 2)).sum.integer_value(), Integer(1));
  EXPECT_EQ(run(classical(1, 1, 3)).sum.integer_value(), Integer(-1));
}

TEST(KloostermanSum, ClassicalMatchesOracle) {
  for (std::int64_t c = 1; c <= 12; ++c)
    for (std::int64_t m = -2; m <= 3; ++m)
      for (std::int64_t n = 1; n <= 3; ++n) {
        const auto r = run(classical(m, n, c));
        EXPECT_TRUE(r.sum.value_equals(from_oracle(oracle::classical_kloosterman(m, n, c))))
            << m << ' ' << n << ' ' << c;
        EXPECT_EQ(r.set_size, static_cast<std::uint64_t>(exactalg::euler_phi(c)));
      }
}

TEST(KloostermanSum, TrivialWeylMatchesOracle) {
  for (int n = 2; n <= 3; ++n)
    for (std::int64_t q = 1; q <= 3; ++q) {
      const std::vector<std::int64_t> ones(n - 1, 1);
      std::vector<std::int64_t> other = ones;
      other[0] = 2;
      for (const auto& N : {ones, other}) {
        const auto query = KloostermanQuery::make(n, q, special_weyl(n, WeylKind::kIdentity), ones, ones, N);
        const auto r = run(query);
        const auto expected = oracle::trivial_weyl_value(n, q, ones, N, ones);
        EXPECT_TRUE(r.sum.value_equals(PhaseSum::constant(expected))) << n << ' ' << q;
        EXPECT_EQ(trivial_weyl_expected(n, q, ones, N, ones), expected);
      }
    }
}

TEST(KloostermanSet, SetExamples) {
  Budget budget;
  EXPECT_EQ(KloostermanSet::build(classical(1, 1, 5), {}, budget).size(), 4u);
  EXPECT_EQ(KloostermanSet::build(wstar(2, 4, 4), {}, budget).size(), 0u);
  const auto id = KloostermanQuery::make(3, 2, special_weyl(3, WeylKind::kIdentity), {1, 1}, {1, 1}, {1, 1});
  EXPECT_EQ(KloostermanSet::build(id, {}, budget).size(), 2u);
}

TEST(KloostermanSet, BackendsAgreeOnWstarCells) {
  for (const auto& c : std::vector<std::pair<std::int64_t, std::int64_t>>{{8, 8}, {8, 16}, {16, 16}}) {
    const auto q = wstar(2, c.first, c.second);
    const auto echelon = run(q, Method::kEchelon);
    const auto lattice = run(q, Method::kWstarLattice);
    const auto grid = run(q, Method::kGridOracle);
    EXPECT_EQ(echelon.set_size, lattice.set_size);
    EXPECT_EQ(echelon.set_size, grid.set_size);
    EXPECT_EQ(echelon.sum, lattice.sum);
    EXPECT_EQ(echelon.sum, grid.sum);
    EXPECT_TRUE(grid.complete);
  }
}

TEST(KloostermanSet, CanonicalKeysAreDistinct) {
  Budget budget;
  const auto set = KloostermanSet::build(wstar(2, 16, 16), {}, budget);
  auto keys = set.sorted_keys();
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
  EXPECT_EQ(keys.size(), set.size());
}

TEST(KloostermanSet, BudgetOverrunIsExplicit) {
  Budget tiny(10);
  SetOptions options;
  options.method = Method::kGridOracle;
  EXPECT_THROW(KloostermanSet::build(wstar(2, 16, 16), options, tiny), ResourceError);
}

TEST(KloostermanSum, IncompatibleSumIsZero) {
  const auto q = KloostermanQuery::make(3, 1, special_weyl(3, WeylKind::kIdentity), {1, 1}, {1, 2}, {2, 1});
  const auto r = run(q);
  EXPECT_FALSE(r.compatible);
  EXPECT_TRUE(r.sum.empty());
}

TEST(KloostermanSum, NonSquarefreeLevelIsFlagged) {
  EXPECT_TRUE(run(wstar(4, 64, 64)).outside_hypotheses);
  EXPECT_FALSE(run(wstar(2, 8, 8)).outside_hypotheses);
}

TEST(Query, Validation) {
  const auto w = special_weyl(3, WeylKind::kWStar);
  EXPECT_THROW(KloostermanQuery::make(3, 2, w, {8}, {1, 1}, {1, 1}), PreconditionError);
  EXPECT_THROW(KloostermanQuery::make(3, 0, w, {8, 8}, {1, 1}, {1, 1}), PreconditionError);
  EXPECT_THROW(KloostermanQuery::make(3, 2, w, {0, 8}, {1, 1}, {1, 1}), PreconditionError);
}

TEST(Divisibility, Examples) {
  const auto ws = special_weyl(3, WeylKind::kWStar);
  EXPECT_TRUE(divisibility_check(3, 2, ws, {8, 16}).admissible);
  EXPECT_FALSE(divisibility_check(3, 2, ws, {8, 4}).admissible);
  const auto generic = weyl_from_name(3, "w1inv");
  EXPECT_FALSE(divisibility_check(3, 2, generic, {8, 8}).admissible);
  EXPECT_TRUE(divisibility_check(3, 2, generic, {16, 8}).admissible);
}

TEST(Divisibility, AgreesWithOracle) {
  const auto ws = special_weyl(3, WeylKind::kWStar);
  const auto w1 = special_weyl(3, WeylKind::kVoronoiW1);
  const auto generic = weyl_from_name(3, "w1inv");
  for (std::int64_t q : {2, 3})
    for (std::int64_t c1 = 1; c1 <= 40; ++c1)
      for (std::int64_t c2 = 1; c2 <= 40; ++c2) {
        EXPECT_EQ(divisibility_check(3, q, ws, {c1, c2}).admissible,
                  oracle::divisibility_holds(oracle::WeylCase::kWStar, q, c1, c2));
        EXPECT_EQ(divisibility_check(3, q, generic, {c1, c2}).admissible,
                  oracle::divisibility_holds(oracle::WeylCase::kGeneric, q, c1, c2));
        EXPECT_EQ(divisibility_check(3, q, w1, {c1, c2}).admissible,
                  oracle::divisibility_holds(oracle::WeylCase::kVoronoi, q, c1, c2));
      }
}

TEST(Support, Examples) {
  const auto a = wstar_support_check(3, 2, {8, 24});
  EXPECT_EQ(a.form, SupportForm::kFormOne);
  EXPECT_EQ(a.r, 1);
  EXPECT_EQ(a.s, 3);
  EXPECT_EQ(wstar_support_check(3, 2, {16, 24}).form, SupportForm::kVanishes);
  const auto b = wstar_support_check(3, 2, {8, 8});
  EXPECT_EQ(b.form, SupportForm::kFormOne);
  EXPECT_EQ(b.s, 1);
  EXPECT_TRUE(b.both);
  EXPECT_EQ(wstar_support_check(4, 2, {16, 48, 144}).form, SupportForm::kFormOne);
  const auto c = wstar_support_check(4, 2, {144, 48, 16});
  EXPECT_EQ(c.form, SupportForm::kFormTwo);
  EXPECT_EQ(c.s, 3);
}

TEST(CabCount, SmallPrimes) {
  Budget budget;
  const auto a = cab_count_and_bound(3, 2, 0, 0, budget);
  EXPECT_EQ(a.bound, 64);
  EXPECT_EQ(a.count, 32);
  EXPECT_TRUE(a.within_bound());
  EXPECT_TRUE(a.remark_identity);
  EXPECT_EQ(cab_exponent(3, 0, 0), 5);
  EXPECT_EQ(cab_bound(4, 2, 0, 0), Integer(2) * 8192);
  EXPECT_EQ(cab_bound(3, 3, 1, 0), Integer(2) * 19683);
  EXPECT_EQ(cab_count_and_bound(3, 2, 1, 0, budget).count, 192);
}

TEST(Laws, Thm32ChainInSupport) {
  Budget budget;
  const auto r = thm32_bound_check(wstar(2, 8, 24), budget);
  EXPECT_EQ(r.support.form, SupportForm::kFormOne);
  EXPECT_TRUE(r.chain_available);
  EXPECT_TRUE(r.chain_holds);
  EXPECT_LE(r.abs_value, static_cast<double>(r.set_size) + 1e-9);
  EXPECT_THROW(thm32_bound_check(wstar(4, 64, 64), budget), PreconditionError);
}

TEST(Laws, CrtGeneralForm) {
  Budget budget;
  const auto q2 = KloostermanQuery::make(2, 2, special_weyl(2, WeylKind::kWLong), {6}, {1}, {1});
  const auto r = crt_factor_check_general(q2, budget);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.sizes_multiply);
  EXPECT_EQ(r.a, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(r.b, (std::vector<std::int64_t>{3}));
}

}  // namespace
}  // namespace gammaq::kloosterman
