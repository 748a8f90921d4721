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


#ifndef GAMMAQ_KLOOSTERMAN_LAWS_HPP
#define GAMMAQ_KLOOSTERMAN_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammaq/kloosterman/sum.hpp"

namespace gammaq::kloosterman {

// S_{q,id}(M, N, c) = N_q when c = (1, ..., 1) and M = N, else 0.
Integer trivial_weyl_expected(int n, std::int64_t q, const std::vector<std::int64_t>& M,
                              const std::vector<std::int64_t>& N, const std::vector<std::int64_t>& c);

// Which necessary divisibility condition applies to (w, c).
enum class DivisibilityCase {
  kIdentity,        // c = (1, ..., 1)
  kGeneric,         // q^{n+1} | c_j for some j
  kVoronoi,         // c = (m g^{n-1}, g^{n-2}, ..., g), (m, q) = 1: q^{n+1} | g^{n-1}
  kVoronoiOffForm,  // w_1 with c not of that form: no condition
  kWStar,           // q^n | c_j for all j
  kNotBlockShape,   // the sum vanishes identically
};

std::string divisibility_case_name(DivisibilityCase c);

struct DivisibilityVerdict {
  DivisibilityCase which = DivisibilityCase::kIdentity;
  bool admissible = true;         // the necessary condition holds
  bool strict_admissible = true;  // the sharper exponents of the proofs hold
  std::string reason;
};

// For n = 2 the identity and the long element are the only block-shaped
// elements; the long element is w_*.
DivisibilityVerdict divisibility_check(int n, std::int64_t q, const WeylElement& w,
                                       const std::vector<std::int64_t>& c);

enum class SupportForm { kVanishes, kFormOne, kFormTwo };

std::string support_form_name(SupportForm f);

struct SupportVerdict {
  SupportForm form = SupportForm::kVanishes;
  std::int64_t r = 0;
  std::int64_t s = 0;
  // c lies in both families (s = 1, or n = 2).
  bool both = false;
};

// c = (q^n r, q^n r s, ..., q^n r s^{n-2}) is form one, the reversed
// progression is form two.  Form one is preferred when both apply.
SupportVerdict wstar_support_check(int n, std::int64_t q, const std::vector<std::int64_t>& c);

struct CabCount {
  int n = 3;
  std::int64_t p = 2;
  int alpha = 0;
  int beta = 0;
  Integer count;  // |set| from the coordinate lattice
  Integer bound;  // 2 p^{(n^3+3n^2-10n+6)/6 + 2 alpha (n-1) + (n-1)(n-2) beta}
  int bound_exponent = 0;
  // N_p p^{(n-1)^2} = p^{(n^3+3n^2-10n+6)/6}
  bool remark_identity = false;
  bool within_bound() const { return count <= bound; }
};

int cab_exponent(int n, int alpha, int beta);
Integer cab_bound(int n, std::int64_t p, int alpha, int beta);
CabCount cab_count_and_bound(int n, std::int64_t p, int alpha, int beta, Budget& budget);

struct Thm32Report {
  SupportVerdict support;
  PhaseSum sum;
  double abs_value = 0;
  std::uint64_t set_size = 0;
  // For prime q and c in the support: c = a * b with a | q^inf, (b, q) = 1.
  std::vector<std::int64_t> a, b;
  std::uint64_t a_set_size = 0;  // |X_q(a)|
  std::uint64_t b_set_size = 0;  // |X_1(b)|
  int alpha = 0, beta = 0;
  Integer chain_bound;  // C bound for (alpha, beta) times |X_1(b)|
  bool chain_available = false;
  bool sizes_multiply = false;
  // |S| <= |set| and, when available, |set| = |X_q(a)||X_1(b)| <= chain_bound.
  bool chain_holds = false;
  // |S| / (N_q c_1...c_{n-1} / q^{n-1} * (prod c_j / q^n, q^inf)).
  double reference_ratio = 0;
};

// w = w_*.  Requires squarefree q.
Thm32Report thm32_bound_check(const KloostermanQuery& query, Budget& budget);

struct CrtReport {
  bool holds = false;
  PhaseSum left, right_q, right_one;
  std::uint64_t left_size = 0, right_q_size = 0, right_one_size = 0;
  std::vector<std::int64_t> a, b;                    // moduli of the two factors
  std::vector<std::int64_t> n_twisted, n_level_one;  // N of the two factors
  bool sizes_multiply = false;
};

// The factorization as stated for c = q c' with (c'_1 ... c'_{n-1}, q) = 1,
// w(1) = n, w(n) = 1.  Both sides vanish identically when q > 1, since the
// cell needs q^n | c_j.
CrtReport crt_factor_check(const KloostermanQuery& query, Budget& budget);

// c = a * b componentwise with a_j | q^inf, (b_j, q) = 1, b_j = 1 mod q and
// w(1) = n, w(n) = 1.  Checks
//   S_q(M, N, c) = S_q(M, N', a) S_1(M, N'', b)
// with N'_{n-i} = N_{n-i} t_b(i) mod (a_1...a_{n-1} q^n) and
// N''_{n-i} = N_{n-i} t_a(i) mod (b_1...b_{n-1})^2, where
// t_d(i) = d*_{w^{-1}(i+1)} / d*_{w^{-1}(i)} for the torus d* of d.
CrtReport crt_factor_check_general(const KloostermanQuery& query, Budget& budget);

}  // namespace gammaq::kloosterman

#endif  // GAMMAQ_KLOOSTERMAN_LAWS_HPP
