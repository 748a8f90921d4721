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

#ifndef GAMMAQ_EXACTALG_NUMTHEORY_HPP
#define GAMMAQ_EXACTALG_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace gammaq::exactalg {

struct PrimePower {
  std::int64_t p;
  int e;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

struct ExtendedGcd {
  std::int64_t g;  // non-negative
  std::int64_t s;
  std::int64_t t;  // a*s + b*t = g
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo m (m >= 1); throws PreconditionError if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
// Least non-negative residue.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m);

// Overflow-checked power; throws std::overflow_error.
std::int64_t ipow(std::int64_t base, unsigned exponent);

bool is_prime(std::int64_t n);
std::vector<PrimePower> factorize(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
bool is_squarefree(std::int64_t n);
int valuation(std::int64_t n, std::int64_t p);
std::int64_t euler_phi(std::int64_t n);

// (c_q, c') with c = c_q * c', every prime of c_q dividing q, gcd(c', q) = 1.
std::pair<std::int64_t, std::int64_t> crt_split(std::int64_t c, std::int64_t q);

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_NUMTHEORY_HPP
