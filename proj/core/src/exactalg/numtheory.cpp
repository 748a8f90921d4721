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

#include "gammaq/exactalg/numtheory.hpp"

#include <stdexcept>

#include "gammaq/errors.hpp"

namespace gammaq::exactalg {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = gcd64(a, b);
  std::int64_t r;
  if (__builtin_mul_overflow(a / g, b, &r)) throw std::overflow_error("lcm overflow");
  return r < 0 ? -r : r;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  require(m >= 1, "modulus must be positive");
  if (m == 1) return 0;
  ExtendedGcd e = extended_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw PreconditionError("element not invertible modulo m");
  return mod_floor(e.s, m);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod_floor(base, m);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("ipow overflow");
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  require(n >= 1, "factorize expects a positive integer");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pe : factorize(n)) out.push_back(pe.p);
  return out;
}

bool is_squarefree(std::int64_t n) {
  for (const auto& pe : factorize(n)) {
    if (pe.e > 1) return false;
  }
  return true;
}

int valuation(std::int64_t n, std::int64_t p) {
  require(n != 0 && p >= 2, "valuation of zero or bad prime");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pe : factorize(n)) r = r / pe.p * (pe.p - 1);
  return r;
}

std::pair<std::int64_t, std::int64_t> crt_split(std::int64_t c, std::int64_t q) {
  require(c >= 1 && q >= 1, "crt_split expects positive arguments");
  std::int64_t cq = 1;
  std::int64_t rest = c;
  for (std::int64_t g = gcd64(rest, q); g > 1; g = gcd64(rest, q)) {
    rest /= g;
    cq *= g;
  }
  return {cq, rest};
}

}  // namespace gammaq::exactalg
