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

#ifndef GAMMAQ_GROUPS_CONGRUENCE_HPP
#define GAMMAQ_GROUPS_CONGRUENCE_HPP

#include <cstdint>

#include "gammaq/exactalg/matrix.hpp"

namespace gammaq::groups {

using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::Rational;

enum class Flavor { kGammaQ, kGammaQNatural };

struct CongruenceSpec {
  int n = 2;
  std::int64_t q = 1;
  Flavor flavor = Flavor::kGammaQ;
};

enum class Direction {
  kToGamma,    // D g D^-1
  kToNatural,  // D^-1 g D
};

// diag(q^{n-1}, ..., q, 1)
ExactMatrix dq_matrix(int n, std::int64_t q);
ExactMatrix conjugate_by_dq(const ExactMatrix& g, std::int64_t q, Direction direction);

bool is_member(const ExactMatrix& g, const CongruenceSpec& spec);
// Entry pattern of the natural group: diagonal in 1 + qZ, entry (i,j) in
// q^{1+i-j}Z off the diagonal.  Does not look at the determinant.
bool matches_natural_pattern(const ExactMatrix& g, std::int64_t q);

// Lattice a + mZ that entry (i, j) (0-based) of a natural-group element lies in.
struct CellLattice {
  Rational offset;
  Rational modulus;
};
CellLattice natural_cell(int i, int j, std::int64_t q);

// |SL_n(Z/qZ)|
Integer index_sl(int n, std::int64_t q);
// [Gamma(q)^natural cap U(Q) : U(Z)] = q^{n(n-1)(n-2)/6}
Integer unipotent_index(int n, std::int64_t q);

// Brute-force cross-checks.
Integer count_sl_mod_q(int n, std::int64_t q);
Integer count_unipotent_cosets(int n, std::int64_t q);

}  // namespace gammaq::groups

#endif  // GAMMAQ_GROUPS_CONGRUENCE_HPP
