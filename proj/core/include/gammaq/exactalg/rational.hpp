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

#ifndef GAMMAQ_EXACTALG_RATIONAL_HPP
#define GAMMAQ_EXACTALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gammaq::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps results canonical

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer floor_of(const Rational& x);
// x - floor(x), in [0, 1).
Rational frac_part(const Rational& x);
// x reduced into [0, m) for a positive rational modulus m.
Rational mod_rational(const Rational& x, const Rational& m);
bool is_integer(const Rational& x);
// x lies in a + mZ (m > 0).
bool in_coset(const Rational& x, const Rational& a, const Rational& m);

Rational pow_rational(const Rational& base, int exponent);
Integer pow_integer(const Integer& base, unsigned long exponent);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& x);

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_RATIONAL_HPP
