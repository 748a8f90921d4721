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

#include <complex>
#include <random>

#include "gammaq/bruhat/decompose.hpp"
#include "gammaq/bruhat/embeddings.hpp"
#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/exactalg/phase_sum.hpp"
#include "gammaq/exactalg/unipotent.hpp"
#include "gammaq/ffchar/fp_matrix.hpp"
#include "gammaq/ffchar/gelfand_graev.hpp"
#include "gammaq/kloosterman/kloosterman_set.hpp"
#include "gammaq/kloosterman/laws.hpp"
#include "gammaq/kloosterman/sum.hpp"
#include "gammaq/latcount/ball.hpp"
#include "gammaq/latcount/det_one.hpp"
#include "gammaq/latcount/lift.hpp"
#include "oracles.hpp"

namespace gammaq {
namespace {

using bruhat::WeylElement;
using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::make_rational;
using exactalg::PhaseSum;
using exactalg::Rational;

constexpr std::uint64_t kSeed = 20260101;

class Gen {
 public:
  explicit Gen(std::uint64_t salt) : rng_(kSeed ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  Rational rational(std::int64_t max_den, std::int64_t max_abs) {
    return make_rational(range(-max_abs, max_abs), range(1, max_den));
  }
  ExactMatrix upper_rational(std::size_t n, std::int64_t max_den) {
    ExactMatrix x = ExactMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) x(i, j) = rational(max_den, 3 * max_den);
    return x;
  }
  ExactMatrix upper_integral(const exactalg::UnipotentPattern& pattern) {
    ExactMatrix g = ExactMatrix::identity(pattern.dimension());
    for (const auto& [i, j] : pattern.positions())
      g = g * exactalg::elementary(pattern.dimension(), i, j, Integer(static_cast<long>(range(-4, 4))));
    return g;
  }
  ExactMatrix integer_matrix(std::size_t n, std::int64_t bound) {
    ExactMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = range(-bound, bound);
    return g;
  }
  WeylElement permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return WeylElement::from_permutation(p);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

TEST(Properties, FracPartAndCrtSplit) {
  Gen g(1);
  for (int it = 0; it < 500; ++it) {
    const Rational x = g.rational(40, 200);
    const Rational f = exactalg::frac_part(x);
    EXPECT_GE(f, 0);
    EXPECT_LT(f, 1);
    EXPECT_TRUE(exactalg::is_integer(x - f));
    const std::int64_t c = g.range(1, 100000), q = g.range(1, 60);
    const auto [a, b] = exactalg::crt_split(c, q);
    EXPECT_EQ(a * b, c);
    EXPECT_EQ(exactalg::gcd64(b, q), 1);
    std::int64_t rest = a;
    for (std::int64_t p : exactalg::prime_divisors(a)) {
      EXPECT_EQ(q % p, 0);
      while (rest % p == 0) rest /= p;
    }
    EXPECT_EQ(rest, 1);
  }
}

TEST(Properties, LeftNormalFormIsCosetInvariantAndIdempotent) {
  Gen g(2);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(g.range(2, 4));
    const ExactMatrix x = g.upper_rational(n, 6);
    const ExactMatrix gamma = g.upper_integral(exactalg::UnipotentPattern::full(n));
    const auto a = exactalg::normal_form_left(x);
    const auto b = exactalg::normal_form_left(gamma * x);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.gamma * a.reduced, x);
    EXPECT_EQ(exactalg::normal_form_left(a.reduced).reduced, a.reduced);
  }
}

TEST(Properties, RightNormalFormIsCosetInvariant) {
  Gen g(3);
  for (int it = 0; it < 200; ++it) {
    const int n = static_cast<int>(g.range(2, 4));
    const auto pattern = bruhat::u_w_pattern(g.permutation(n));
    ExactMatrix y = ExactMatrix::identity(static_cast<std::size_t>(n));
    for (const auto& [i, j] : pattern.positions()) y(i, j) = g.rational(6, 18);
    const ExactMatrix gamma = g.upper_integral(pattern);
    const auto a = exactalg::normal_form_right(y, pattern);
    const auto b = exactalg::normal_form_right(y * gamma, pattern);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.reduced * a.gamma, y);
    EXPECT_TRUE(pattern.supports(a.reduced));
  }
}

TEST(Properties, BruhatRecomposesAndMinorsAreCosetInvariant) {
  Gen g(4);
  int done = 0;
  while (done < 200) {
    const std::size_t n = static_cast<std::size_t>(g.range(2, 4));
    const ExactMatrix m = g.integer_matrix(n, 5);
    if (m.determinant() == 0) continue;
    ++done;
    const auto d = bruhat::bruhat_decompose(m, done % 2 == 0);
    EXPECT_EQ(d.recompose(), m);
    EXPECT_TRUE(bruhat::u_w_pattern(d.w).supports(d.y));
    EXPECT_TRUE(d.x.is_upper_unitriangular());
    const ExactMatrix left = g.upper_integral(exactalg::UnipotentPattern::full(n));
    const ExactMatrix right = g.upper_integral(bruhat::u_w_pattern(d.w));
    EXPECT_EQ(bruhat::moduli_from_minors(left * m * right, d.w), d.c);
  }
}

TEST(Properties, TorusEmbeddings) {
  Gen g(5);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(g.range(2, 5));
    std::vector<std::int64_t> c(n - 1);
    std::vector<Rational> y(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      c[i] = g.range(1, 50);
      y[i] = make_rational(g.range(1, 20), g.range(1, 20));
    }
    EXPECT_EQ(bruhat::cstar_embed(c).determinant(), 1);
    const Rational k = make_rational(g.range(1, 9), g.range(1, 9));
    EXPECT_EQ(bruhat::iwasawa_y(bruhat::iota_embed(y) * k), y);
  }
}

TEST(Properties, PhaseSumAlgebra) {
  Gen g(6);
  for (int it = 0; it < 200; ++it) {
    PhaseSum a, b;
    for (int k = 0; k < 5; ++k) {
      a.add(g.rational(12, 12), g.range(-2, 3));
      b.add(g.rational(12, 12), g.range(-2, 3));
    }
    PhaseSum ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    const auto va = a.evaluate(), vb = b.evaluate(), vp = a.product(b).evaluate();
    const std::complex<double> za(va.real_approx, va.imag_approx), zb(vb.real_approx, vb.imag_approx);
    const auto prod = za * zb;
    EXPECT_NEAR(vp.real_approx, prod.real(), 1e-9);
    EXPECT_NEAR(vp.imag_approx, prod.imag(), 1e-9);
    EXPECT_NEAR(a.conjugate().evaluate().imag_approx, -va.imag_approx, 1e-12);
  }
}

TEST(Properties, ClassicalSumsAreReal) {
  Gen g(7);
  for (int it = 0; it < 60; ++it) {
    const auto q = kloosterman::KloostermanQuery::make(2, 1, bruhat::special_weyl(2, bruhat::WeylKind::kWLong),
                                                       {g.range(1, 40)}, {g.range(-9, 9)}, {g.range(1, 9)});
    Budget budget;
    const auto r = kloosterman::kloosterman_sum(q, {}, budget);
    EXPECT_TRUE(r.sum.value_equals(r.sum.conjugate())) << q.describe();
  }
}

TEST(Properties, BackendsAgree) {
  Gen g(8);
  using kloosterman::Method;
  for (int it = 0; it < 12; ++it) {
    const std::int64_t q = g.range(1, 3);
    const int n = 3;
    const std::vector<std::int64_t> N{g.range(1, 2), g.range(1, 2)};
    kloosterman::KloostermanQuery query;
    if (it % 2 == 0) {
      query = kloosterman::KloostermanQuery::make(n, q, bruhat::special_weyl(n, bruhat::WeylKind::kIdentity), {1, 1},
                                                  N, N);
    } else {
      // Lattice-shaped moduli, where the grid height is certified.
      const std::int64_t c1 = 8 * g.range(1, 2);
      query = kloosterman::KloostermanQuery::make(n, 2, bruhat::special_weyl(n, bruhat::WeylKind::kWStar),
                                                  {c1, c1 * g.range(1, 2)}, N, {1, 1});
    }
    Budget budget;
    kloosterman::SetOptions echelon, grid;
    echelon.method = Method::kEchelon;
    grid.method = Method::kGridOracle;
    const auto a = kloosterman::kloosterman_sum(query, echelon, budget);
    const auto b = kloosterman::kloosterman_sum(query, grid, budget);
    EXPECT_EQ(a.set_size, b.set_size) << query.describe();
    EXPECT_EQ(a.sum, b.sum) << query.describe();
  }
}

TEST(Properties, WstarSetSizeSymmetricUnderReversal) {
  Gen g(9);
  for (int it = 0; it < 10; ++it) {
    const std::int64_t c1 = 8 * g.range(1, 5), c2 = 8 * g.range(1, 5);
    const auto w = bruhat::special_weyl(3, bruhat::WeylKind::kWStar);
    Budget budget;
    const auto a = kloosterman::KloostermanSet::build(
        kloosterman::KloostermanQuery::make(3, 2, w, {c1, c2}, {1, 1}, {1, 1}), {}, budget);
    const auto b = kloosterman::KloostermanSet::build(
        kloosterman::KloostermanQuery::make(3, 2, w, {c2, c1}, {1, 1}, {1, 1}), {}, budget);
    EXPECT_EQ(a.size(), b.size()) << c1 << ',' << c2;
  }
}

TEST(Properties, NonemptySetsSatisfyDivisibility) {
  Gen g(10);
  const std::vector<std::string> names{"wstar", "w1", "w1inv"};
  for (int it = 0; it < 60; ++it) {
    const std::int64_t q = g.range(2, 3);
    const auto w = bruhat::weyl_from_name(3, names[static_cast<std::size_t>(it) % names.size()]);
    const std::vector<std::int64_t> c{g.range(1, 24), g.range(1, 24)};
    const auto query = kloosterman::KloostermanQuery::make(3, q, w, c, {1, 1}, {1, 1});
    Budget budget;
    const auto set = kloosterman::KloostermanSet::build(query, {}, budget);
    if (set.size() > 0) {
      EXPECT_TRUE(kloosterman::divisibility_check(3, q, w, c).admissible) << query.describe();
    }
  }
}

TEST(Properties, CrtGeneralFormHoldsForClassicalSums) {
  Gen g(11);
  for (int it = 0; it < 40; ++it) {
    const std::int64_t q = g.range(2, 3);
    const auto query = kloosterman::KloostermanQuery::make(2, q, bruhat::special_weyl(2, bruhat::WeylKind::kWLong),
                                                           {exactalg::ipow(q, static_cast<unsigned>(g.range(1, 2))) * (1 + q * g.range(0, 4))}, {g.range(1, 4)},
                                                           {g.range(1, 4)});
    Budget budget;
    const auto r = kloosterman::crt_factor_check_general(query, budget);
    EXPECT_TRUE(r.holds) << query.describe();
  }
}

TEST(Properties, BallCountsAreMonotoneAndNested) {
  Gen g(12);
  for (int it = 0; it < 30; ++it) {
    const std::int64_t q = g.range(1, 4), T = g.range(2, 25);
    Budget budget;
    const Integer here = latcount::count_ball(2, q, T, budget).count;
    EXPECT_GE(here, 1);
    EXPECT_LE(here, latcount::count_ball(2, q, T + 1, budget).count);
    EXPECT_LE(latcount::count_ball(2, 2 * q, T, budget).count, here);
    const Integer frob = latcount::count_ball(2, q, T, budget, latcount::Norm::kFrobenius).count;
    EXPECT_LE(frob, here);
    EXPECT_LE(latcount::count_ball(2, q, T / 2, budget).count, frob);
  }
}

TEST(Properties, LiftsAreValidAndMinimal) {
  Gen g(13);
  for (int it = 0; it < 60; ++it) {
    const std::int64_t q = g.range(2, 17);
    Budget budget;
    const auto classes = latcount::sl_mod_q(2, q, budget);
    const auto& r = classes[static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(classes.size()) - 1))];
    const auto lift = latcount::smallest_lift(2, q, r, budget);
    EXPECT_EQ(lift.gamma[0] * lift.gamma[3] - lift.gamma[1] * lift.gamma[2], 1);
    std::int64_t norm = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(oracle::floor_mod(lift.gamma[k] - r[k], q), 0);
      norm = std::max(norm, std::abs(lift.gamma[k]));
    }
    EXPECT_EQ(norm, lift.norm);
    if (lift.norm > 1) {
      EXPECT_EQ(latcount::DetOneBox(2, q, r, lift.norm - 1).count(budget), 0u);
    }
  }
}

TEST(Properties, JordanTypesMatchRankOracle) {
  Gen g(14);
  for (int it = 0; it < 200; ++it) {
    const int n = static_cast<int>(g.range(2, 4)), p = it % 2 == 0 ? 2 : 3;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e[static_cast<std::size_t>(i * n + j)] = i == j ? 1 : (j > i ? g.range(0, p - 1) : 0);
    const auto u = ffchar::FpMatrix::from_entries(n, p, e);
    EXPECT_EQ(ffchar::unipotent_jordan_type(u), oracle::jordan_type(e, n, p));
  }
}

TEST(Properties, GelfandGraevAverageIsOneForEveryGenericTwist) {
  Gen g(15);
  for (int it = 0; it < 20; ++it) {
    const int n = it % 2 == 0 ? 2 : 3;
    const int p = n == 2 ? static_cast<int>(std::vector<int>{2, 3, 5, 7}[static_cast<std::size_t>(g.range(0, 3))])
                         : static_cast<int>(g.range(2, 3));
    std::vector<std::int64_t> twist;
    for (int k = 0; k + 1 < n; ++k) twist.push_back(g.range(1, p - 1));
    Budget budget;
    const auto r = ffchar::gg_sum(ffchar::cuspidal_unipotent_formula(n, p), budget, twist);
    ASSERT_TRUE(r.rational);
    EXPECT_EQ(r.sum_value, 1) << n << ' ' << p;
  }
}

}  // namespace
}  // namespace gammaq
