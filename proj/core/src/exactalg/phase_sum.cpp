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

#include "gammaq/exactalg/phase_sum.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/cyclotomic.hpp"

namespace gammaq::exactalg {
namespace {

class MpfrVar {
 public:
  explicit MpfrVar(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  ~MpfrVar() { mpfr_clear(v_); }
  MpfrVar(const MpfrVar&) = delete;
  MpfrVar& operator=(const MpfrVar&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::string format_fixed(mpfr_ptr x, int places) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNf", places, x);
  std::string s(buf);
  mpfr_free_str(buf);
  if (!s.empty() && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::vector<Integer> as_polynomial(const PhaseSum::Terms& terms, const Integer& L, int& order) {
  require(L.fits_sint_p() && L <= 50'000'000, "phase denominators too large for exact comparison");
  order = static_cast<int>(L.get_si());
  std::vector<Integer> poly(order);
  for (const auto& [ph, m] : terms) {
    const Rational k = ph.value() * Rational(L);
    poly[k.get_num().get_si()] += Integer(static_cast<long>(m));
  }
  return poly;
}

}  // namespace

PhaseSum PhaseSum::constant(std::int64_t value) {
  PhaseSum s;
  s.add(Rational(0), value);
  return s;
}

void PhaseSum::add(const RationalPhase& phase, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(phase, mult);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, mult, &it->second))
      throw std::overflow_error("phase multiplicity overflow");
    if (it->second == 0) terms_.erase(it);
  }
}

void PhaseSum::add(const Rational& phase, std::int64_t mult) { add(RationalPhase(phase), mult); }

PhaseSum& PhaseSum::merge(const PhaseSum& other) {
  for (const auto& [ph, m] : other.terms_) add(ph, m);
  return *this;
}

PhaseSum PhaseSum::product(const PhaseSum& other) const {
  PhaseSum out;
  for (const auto& [a, ma] : terms_)
    for (const auto& [b, mb] : other.terms_) {
      std::int64_t m;
      if (__builtin_mul_overflow(ma, mb, &m)) throw std::overflow_error("phase multiplicity overflow");
      out.add(a.value() + b.value(), m);
    }
  return out;
}

PhaseSum PhaseSum::conjugate() const {
  PhaseSum out;
  for (const auto& [ph, m] : terms_) out.add(-ph.value(), m);
  return out;
}

std::int64_t PhaseSum::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& kv : terms_) t += kv.second < 0 ? -kv.second : kv.second;
  return t;
}

Integer PhaseSum::denominator_lcm() const {
  Integer L = 1;
  for (const auto& kv : terms_) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), kv.first.value().get_den_mpz_t());
  return L;
}

bool PhaseSum::value_equals(const PhaseSum& other) const {
  PhaseSum diff = *this;
  for (const auto& [ph, m] : other.terms_) diff.add(ph, -m);
  if (diff.empty()) return true;
  int order = 0;
  const auto poly = as_polynomial(diff.terms_, diff.denominator_lcm(), order);
  for (const auto& v : reduce_mod_cyclotomic(poly, order))
    if (v != 0) return false;
  return true;
}

std::optional<Integer> PhaseSum::integer_value() const {
  if (empty()) return Integer(0);
  int order = 0;
  const auto poly = as_polynomial(terms_, denominator_lcm(), order);
  const auto red = reduce_mod_cyclotomic(poly, order);
  for (std::size_t k = 1; k < red.size(); ++k)
    if (red[k] != 0) return std::nullopt;
  return red[0];
}

PhaseValue PhaseSum::evaluate(int digits) const {
  require(digits >= 1, "precision must be at least one digit");
  const std::int64_t total = std::max<std::int64_t>(1, total_multiplicity());
  const int extra = static_cast<int>(std::ceil(std::log10(static_cast<double>(total)))) + 3;
  const auto bits = static_cast<mpfr_prec_t>(std::ceil((digits + extra) * 3.3219280948873622)) + 16;

  MpfrVar pi(bits), re(bits), im(bits), ang(bits), c(bits), s(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (const auto& [ph, m] : terms_) {
    mpfr_set_q(ang.get(), ph.value().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(ang.get(), ang.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_2ui(ang.get(), ang.get(), 1, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
    mpfr_mul_si(c.get(), c.get(), static_cast<long>(m), MPFR_RNDN);
    mpfr_mul_si(s.get(), s.get(), static_cast<long>(m), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), c.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), s.get(), MPFR_RNDN);
  }
  PhaseValue v;
  v.digits = digits;
  v.real = format_fixed(re.get(), digits + 1);
  v.imag = format_fixed(im.get(), digits + 1);
  v.real_approx = mpfr_get_d(re.get(), MPFR_RNDN);
  v.imag_approx = mpfr_get_d(im.get(), MPFR_RNDN);
  v.abs_approx = std::hypot(v.real_approx, v.imag_approx);
  return v;
}

std::string PhaseSum::to_string() const {
  std::string s;
  for (const auto& [ph, m] : terms_) {
    if (!s.empty()) s += ',';
    s += ph.value().get_num().get_str() + '/' + ph.value().get_den().get_str() + ':' + std::to_string(m);
  }
  return s;
}

}  // namespace gammaq::exactalg
