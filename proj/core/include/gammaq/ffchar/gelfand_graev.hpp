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


#ifndef GAMMAQ_FFCHAR_GELFAND_GRAEV_HPP
#define GAMMAQ_FFCHAR_GELFAND_GRAEV_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gammaq/exactalg/phase_sum.hpp"
#include "gammaq/ffchar/char_table.hpp"

namespace gammaq::ffchar {

using exactalg::Integer;
using exactalg::PhaseSum;
using exactalg::Rational;

// Character values of a GL_n(F_p) representation on unipotent Jordan types.
struct UnipotentClassFunction {
  int n = 2;
  int p = 2;
  std::map<Partition, std::int64_t> values;
  std::int64_t dim() const;
};

struct GGReport {
  int n = 2;
  int p = 2;
  UnipotentClassFunction character;
  std::vector<std::int64_t> twist;  // coefficients of the superdiagonal
  PhaseSum raw;                     // sum over U(F_p) before scaling
  bool rational = false;
  Rational sum_value;               // p^{-n(n-1)/2} * raw, when rational
  double real_approx = 0;
  double imag_approx = 0;
};

// p^{-n(n-1)/2} sum_{u in U(F_p)} chi(type(u)) e(-(a_1 u_12 + ... + a_{n-1} u_{n-1,n}) / p),
// with a = twist (all ones when empty).
GGReport gg_sum(const UnipotentClassFunction& chi, Budget& budget, const std::vector<std::int64_t>& twist = {});

// prod_{i=1}^{n-1} (p^i - 1)
Integer cuspidal_dim(int n, int p);

// Restriction of character a of the table to unipotent classes.  Throws
// IntegrityError if a value is not a rational integer.
UnipotentClassFunction unipotent_restriction(const CharacterTable& table, std::size_t a);

// n = 2: {(1,1): p-1, (2): -1}; n = 3: {(1,1,1): (p-1)(p^2-1), (2,1): -(p-1), (3): 1}.
UnipotentClassFunction cuspidal_unipotent_formula(int n, int p);

// The formula values, certified against every cuspidal character of the
// oracle table.  Throws IntegrityError on any disagreement.
UnipotentClassFunction cuspidal_unipotent_char(int n, int p, Budget& budget);
UnipotentClassFunction cuspidal_unipotent_char(const CharacterTable& table);

}  // namespace gammaq::ffchar

#endif  // GAMMAQ_FFCHAR_GELFAND_GRAEV_HPP
