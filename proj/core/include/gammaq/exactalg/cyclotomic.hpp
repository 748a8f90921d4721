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

#ifndef GAMMAQ_EXACTALG_CYCLOTOMIC_HPP
#define GAMMAQ_EXACTALG_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammaq/exactalg/rational.hpp"

namespace gammaq::exactalg {

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

// Remainder of sum_k poly[k] x^k modulo Phi_m, after folding exponents mod m.
// The result has length phi(m) and is the canonical coordinate vector of the
// element of Z[zeta_m] in the power basis.
std::vector<Integer> reduce_mod_cyclotomic(const std::vector<Integer>& poly, int m);

// Element sum_k c_k zeta_m^k of Z[zeta_m], zeta_m = exp(2 pi i / m).  The
// representation is not unique; comparisons reduce modulo Phi_m.
class CyclotomicInteger {
 public:
  CyclotomicInteger() : CyclotomicInteger(1) {}
  explicit CyclotomicInteger(int order);
  static CyclotomicInteger from_integer(int order, std::int64_t value);

  int order() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  void add_root(int k, std::int64_t mult);

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(std::int64_t s) const;
  CyclotomicInteger conjugate() const;
  // Galois action zeta -> zeta^k, gcd(k, m) = 1.
  CyclotomicInteger galois(int k) const;

  bool is_zero() const;
  bool operator==(const CyclotomicInteger& o) const { return (*this - o).is_zero(); }
  std::optional<Integer> as_integer() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  int m_;
  std::vector<std::int64_t> c_;
};

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_CYCLOTOMIC_HPP
