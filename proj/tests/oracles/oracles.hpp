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


// Brute-force reference computations for the tests.  Nothing here depends on
// the gammaq library: every routine uses plain integers and its own
// arithmetic so that agreement with the library is evidence, not tautology.

#ifndef GAMMAQ_TESTS_ORACLES_HPP
#define GAMMAQ_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// (numerator in [0, den), den) in lowest terms -> multiplicity.
using PhaseMultiset = std::map<std::pair<i64, i64>, i64>;

i64 gcd(i64 a, i64 b);
i64 floor_mod(i64 a, i64 m);
i64 inverse_mod(i64 a, i64 m);
i64 power(i64 b, int e);

// Phases (m d + n dbar) / c over d mod c with (d, c) = 1.
PhaseMultiset classical_kloosterman(i64 m, i64 n, i64 c);

// q^{n(n-1)(n-2)/6} when M = N and c = (1, ..., 1), else 0.
i64 trivial_weyl_value(int n, i64 q, const std::vector<i64>& M, const std::vector<i64>& N,
                       const std::vector<i64>& c);

// |SL_n(Z/qZ)|: the first n-1 rows are enumerated, and the last row solves
// v . x = 1 (mod q) exactly when the cofactor vector v is unimodular mod q.
i64 sl_mod_q_count(int n, i64 q);

// Cosets U(Z) \ U_q, where U_q is the set of upper unitriangular x with
// D x D^{-1} in Gamma(q), D = diag(q^{n-1}, ..., 1).  Members of a fine grid in
// [0,1) are moved by a fixed integral unipotent and then row-reduced; the
// distinct reduced forms are counted.
i64 unipotent_coset_count(int n, i64 q);

// Number of gamma in Gamma(q) (n = 2 or 3) with max-norm <= T for every
// T <= t_max, from one scan of the residue-class box.  Entry T of the result.
std::vector<i64> ball_counts(int n, i64 q, i64 t_max);

// Smallest max-norm of an SL_2(Z) lift of each class of SL_2(Z/qZ), keyed by
// the residues (a, b, c, d), from all SL_2(Z) matrices of norm <= bound.
std::map<std::vector<i64>, i64> min_lift_norms(i64 q, i64 bound);

// Divisibility condition for n = 3 moduli (c1, c2) at level q.
enum class WeylCase { kWStar, kVoronoi, kGeneric };
bool divisibility_holds(WeylCase w, i64 q, i64 c1, i64 c2);

// Chains of subspaces of F_p^3 with dimensions the partial sums of parts.
i64 flag_count_f3(const std::vector<int>& parts, int p);

// Jordan type (decreasing block sizes) of a unipotent n x n matrix over F_p,
// from the ranks of (u - 1)^k.
std::vector<int> jordan_type(const std::vector<i64>& u, int n, int p);

struct AverageResult {
  bool rational = false;
  i64 numerator = 0;    // p^{n(n-1)/2} times the average
  i64 denominator = 1;  // p^{n(n-1)/2}
};

// p^{-n(n-1)/2} sum over u in U(F_p) of chi(u) e(-sum a_i u_{i,i+1} / p), with
// chi given on Jordan types.  Rational exactly when the coefficients of the
// nontrivial p-th roots agree.
AverageResult gelfand_graev_average(int n, int p, const std::map<std::vector<int>, i64>& chi,
                                    const std::vector<i64>& twist);

}  // namespace oracle

#endif  // GAMMAQ_TESTS_ORACLES_HPP
