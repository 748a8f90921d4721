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

#include "gammaq/exactalg/rational.hpp"

#include <string>

#include "gammaq/errors.hpp"

namespace gammaq::exactalg {

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac_part(const Rational& x) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return make_rational(r, x.get_den());
}

Rational mod_rational(const Rational& x, const Rational& m) {
  Rational t = x / m;
  return x - m * Rational(floor_of(t));
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool in_coset(const Rational& x, const Rational& a, const Rational& m) {
  return is_integer((x - a) / m);
}

Rational pow_rational(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = base;
  if (exponent < 0) {
    require(base != 0, "zero to a negative power");
    b = 1 / base;
    exponent = -exponent;
  }
  for (int i = 0; i < exponent; ++i) result *= b;
  return result;
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw PreconditionError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw PreconditionError("bad rational literal: " + s);
  if (r.get_den() == 0) throw PreconditionError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return x.get_si();
}

}  // namespace gammaq::exactalg
