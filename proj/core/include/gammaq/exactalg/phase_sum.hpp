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

#ifndef GAMMAQ_EXACTALG_PHASE_SUM_HPP
#define GAMMAQ_EXACTALG_PHASE_SUM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gammaq/exactalg/rational.hpp"

namespace gammaq::exactalg {

// A rational number in [0, 1) standing for e(x) = exp(2 pi i x).
class RationalPhase {
 public:
  RationalPhase() = default;
  explicit RationalPhase(const Rational& x) : v_(frac_part(x)) {}
  const Rational& value() const { return v_; }
  bool operator<(const RationalPhase& o) const { return v_ < o.v_; }
  bool operator==(const RationalPhase& o) const { return v_ == o.v_; }

 private:
  Rational v_;
};

struct PhaseValue {
  std::string real;  // decimal, digits+1 places
  std::string imag;
  double real_approx = 0;
  double imag_approx = 0;
  double abs_approx = 0;
  int digits = 0;  // |error| <= 10^-digits in each component
};

// Finite formal sum of m_phi * e(phi) with phi rational mod 1.
class PhaseSum {
 public:
  using Terms = std::map<RationalPhase, std::int64_t>;

  PhaseSum() = default;
  static PhaseSum constant(std::int64_t value);

  void add(const Rational& phase, std::int64_t mult = 1);
  void add(const RationalPhase& phase, std::int64_t mult = 1);
  PhaseSum& merge(const PhaseSum& other);
  PhaseSum product(const PhaseSum& other) const;
  PhaseSum conjugate() const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // sum of |m_phi|
  std::int64_t total_multiplicity() const;
  Integer denominator_lcm() const;

  // Multiset equality.
  bool operator==(const PhaseSum& o) const { return terms_ == o.terms_; }
  // Equality of the complex values, decided in Z[zeta_L].
  bool value_equals(const PhaseSum& other) const;
  bool value_is_zero() const { return value_equals(PhaseSum()); }
  // The exact value when it is rational (then it is an integer).
  std::optional<Integer> integer_value() const;

  // Summation in increasing phase order at a working precision chosen from
  // digits and the total multiplicity.
  PhaseValue evaluate(int digits = 15) const;

  // "num/den:mult" pairs separated by ','.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_PHASE_SUM_HPP
