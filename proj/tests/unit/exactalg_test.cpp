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
#include "gammaq/exactalg/cyclotomic.hpp"
#include "gammaq/exactalg/matrix.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/exactalg/phase_sum.hpp"
#include "gammaq/exactalg/unipotent.hpp"

namespace gammaq::exactalg {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("-7/2"), make_rational(-7, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(make_rational(1, 0), PreconditionError);
}

TEST(Rational, FloorAndFraction) {
  EXPECT_EQ(floor_of(make_rational(-1, 3)), -1);
  EXPECT_EQ(frac_part(make_rational(-1, 3)), make_rational(2, 3));
  EXPECT_EQ(frac_part(make_rational(7, 2)), make_rational(1, 2));
  EXPECT_TRUE(is_integer(Rational(4)));
  EXPECT_FALSE(is_integer(make_rational(1, 2)));
  EXPECT_TRUE(in_coset(make_rational(7, 3), make_rational(1, 3), Rational(2)));
  EXPECT_FALSE(in_coset(make_rational(4, 3), make_rational(1, 3), Rational(2)));
}

TEST(NumberTheory, CrtSplitExamples) {
  EXPECT_EQ(crt_split(12, 2), std::make_pair(std::int64_t{4}, std::int64_t{3}));
  EXPECT_EQ(crt_split(35, 6), std::make_pair(std::int64_t{1}, std::int64_t{35}));
  EXPECT_EQ(crt_split(720, 6), std::make_pair(std::int64_t{144}, std::int64_t{5}));
}

TEST(NumberTheory, Basics) {
  EXPECT_EQ(gcd64(-12, 18), 6);
  EXPECT_EQ(lcm64(4, 6), 12);
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_THROW(mod_inverse(2, 4), PreconditionError);
  EXPECT_EQ(mod_floor(-3, 5), 2);
  EXPECT_EQ(pow_mod(3, 4, 5), 1);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_EQ(valuation(48, 2), 4);
  EXPECT_EQ(euler_phi(12), 4);
  const auto f = factorize(720);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].p, 2);
  EXPECT_EQ(f[0].e, 4);
  EXPECT_EQ(prime_divisors(60), (std::vector<std::int64_t>{2, 3, 5}));
  const auto eg = extended_gcd(240, 46);
  EXPECT_EQ(eg.g, 2);
  EXPECT_EQ(240 * eg.s + 46 * eg.t, 2);
}

TEST(ExactMatrix, ParseDeterminantInverse) {
  const ExactMatrix g = ExactMatrix::parse("2,1;3,2");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.determinant(), 1);
  EXPECT_EQ(g * g.inverse(), ExactMatrix::identity(2));
  EXPECT_EQ(ExactMatrix::parse(g.to_string()), g);
  const ExactMatrix h = ExactMatrix::parse("1/2,0,0;0,3,1;0,0,2");
  EXPECT_EQ(h.determinant(), 3);
  EXPECT_EQ(h.minor({1, 2}, {1, 2}), 6);
  EXPECT_THROW(ExactMatrix::parse("1,2;2,4").inverse(), PreconditionError);
  EXPECT_TRUE(ExactMatrix::parse("1,5/2;0,1").is_upper_unitriangular());
  EXPECT_FALSE(ExactMatrix::parse("1,1/2;0,1").is_integral());
}

TEST(Unipotent, LeftNormalFormExamples) {
  const auto id = normal_form_left(ExactMatrix::identity(3));
  EXPECT_EQ(id.gamma, ExactMatrix::identity(3));
  EXPECT_EQ(id.reduced, ExactMatrix::identity(3));
  const ExactMatrix x = ExactMatrix::parse("1,7/2;0,1");
  const auto nf = normal_form_left(x);
  EXPECT_EQ(nf.gamma(0, 1), 3);
  EXPECT_EQ(nf.reduced(0, 1), make_rational(1, 2));
  EXPECT_EQ(nf.gamma * nf.reduced, x);
  EXPECT_THROW(normal_form_left(ExactMatrix::parse("2,0;0,1")), PreconditionError);
}

TEST(Unipotent, RightNormalFormRespectsPattern) {
  const UnipotentPattern pattern(3, {{0, 2}});
  const ExactMatrix y = ExactMatrix::parse("1,0,9/4;0,1,0;0,0,1");
  const auto nf = normal_form_right(y, pattern);
  EXPECT_EQ(nf.reduced(0, 2), make_rational(1, 4));
  EXPECT_EQ(nf.reduced * nf.gamma, y);
  EXPECT_TRUE(pattern.supports(nf.gamma));
  EXPECT_THROW(normal_form_right(ExactMatrix::parse("1,1/2,0;0,1,0;0,0,1"), pattern), PreconditionError);
}

TEST(Cyclotomic, RootsOfUnityRelations) {
  CyclotomicInteger s(3);
  s.add_root(0, 1);
  s.add_root(1, 1);
  s.add_root(2, 1);
  EXPECT_TRUE(s.is_zero());
  CyclotomicInteger t(4);
  t.add_root(1, 1);
  const auto sq = t * t;  // i^2 = -1
  ASSERT_TRUE(sq.as_integer().has_value());
  EXPECT_EQ(*sq.as_integer(), -1);
  EXPECT_EQ(t.conjugate() * t, CyclotomicInteger::from_integer(4, 1));
  EXPECT_EQ(cyclotomic_polynomial(6).size(), 3u);
}

TEST(PhaseSum, EvaluationExamples) {
  PhaseSum a;
  a.add(Rational(0));
  EXPECT_NEAR(a.evaluate().real_approx, 1.0, 1e-15);
  PhaseSum b;
  b.add(make_rational(1, 2));
  b.add(Rational(0));
  EXPECT_NEAR(b.evaluate().abs_approx, 0.0, 1e-15);
  EXPECT_TRUE(b.value_is_zero());
  PhaseSum c;
  c.add(make_rational(1, 3));
  c.add(make_rational(2, 3));
  EXPECT_NEAR(c.evaluate().real_approx, -1.0, 1e-15);
  ASSERT_TRUE(c.integer_value().has_value());
  EXPECT_EQ(*c.integer_value(), -1);
  EXPECT_EQ(c.to_string(), "1/3:1,2/3:1");
}

TEST(PhaseSum, MergeCancelsAndReducesModOne) {
  PhaseSum a;
  a.add(make_rational(5, 4), 2);
  a.add(make_rational(1, 4), -2);
  EXPECT_TRUE(a.empty());
  a.add(make_rational(-1, 3));
  EXPECT_EQ(a.terms().begin()->first.value(), make_rational(2, 3));
  PhaseSum b = PhaseSum::constant(3);
  b.merge(a);
  EXPECT_EQ(b.total_multiplicity(), 4);
  EXPECT_EQ(b.denominator_lcm(), 3);
  EXPECT_FALSE(b.integer_value().has_value());
}

TEST(PhaseSum, HighPrecisionEvaluation) {
  PhaseSum s;
  for (int k = 1; k <= 6; ++k) s.add(make_rational(k, 7));
  const auto v = s.evaluate(40);
  EXPECT_EQ(v.digits, 40);
  EXPECT_EQ(v.real.substr(0, 12), "-1.000000000");
  EXPECT_TRUE(s.value_equals(PhaseSum::constant(-1)));
}

}  // namespace
}  // namespace gammaq::exactalg
