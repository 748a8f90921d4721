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

#ifndef GAMMAQ_KLOOSTERMAN_ENUMERATORS_HPP
#define GAMMAQ_KLOOSTERMAN_ENUMERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/kloosterman/query.hpp"

namespace gammaq::kloosterman {

// Exact enumeration of all (x, y), x in U(Q) and y in U_w(Q) with free
// entries in [0, 1), such that x * diag(torus) * w * y lies in Gamma(q)^natural.
// Rows of the product are fixed from the bottom up; within a row, each
// column either pins one new coordinate to an arithmetic progression or is a
// congruence check, so the search is complete without any height bound.
void enumerate_echelon(int n, std::int64_t q, const std::vector<Rational>& torus, const WeylElement& w,
                       Budget& budget, const RepVisitor& visit);
void enumerate_echelon(const KloostermanQuery& query, Budget& budget, const RepVisitor& visit);

// The w_* cell at c = (p^{n+a}, p^{n+a+b}, ..., p^{n+a+b(n-2)}), q = p.
struct WstarParams {
  int n = 3;
  std::int64_t p = 2;
  int alpha = 0;
  int beta = 0;

  std::vector<std::int64_t> moduli() const;
};
// Size of the coordinate lattice that is scanned.
Integer wstar_candidate_count(const WstarParams& params);
// Scans the coordinate lattice and keeps exact members.
void enumerate_wstar_lattice(const WstarParams& params, Budget& budget, const RepVisitor& visit);
// (p, alpha, beta) when query is a w_* query of that shape.
std::optional<WstarParams> wstar_params_of(const KloostermanQuery& query);

// y runs over the grid (1/H)Z cap [0,1) on the U_w pattern; for each y the x
// rows are solved exactly.  Complete only when every y-coordinate of the set
// has denominator dividing H.
void enumerate_grid(const KloostermanQuery& query, std::int64_t height, Budget& budget,
                    const RepVisitor& visit);
// A height that provably contains every y denominator, when one is known
// (identity, n = 2 long element, w_* at the lemma's moduli).
std::optional<std::int64_t> certified_height(const KloostermanQuery& query);

// n = 2, long element: x = a/c, y = d/c with a d = 1 mod c, a = d = 1 mod q.
void enumerate_classical_n2(const KloostermanQuery& query, Budget& budget, const RepVisitor& visit);

}  // namespace gammaq::kloosterman

#endif  // GAMMAQ_KLOOSTERMAN_ENUMERATORS_HPP
