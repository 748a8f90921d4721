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

#include <algorithm>

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {
namespace {

using exactalg::in_coset;
using exactalg::mod_rational;

// All x-rows r solving the row conditions for the fixed rows B = t w y.
// Returns the list of (x_{r,r+1}, ..., x_{r,n-1}).
void solve_row(int n, int r, const std::vector<Rational>& B, const WeylElement& w, std::int64_t q,
               std::vector<Rational>& cur, int b, std::vector<std::vector<Rational>>& out) {
  if (b == n) {
    out.push_back(cur);
    return;
  }
  Rational value = B[r * n + b];
  for (int j = r + 1; j < n; ++j)
    if (w.image(j) < b) value += cur[j - r - 1] * B[j * n + b];
  const auto cell = groups::natural_cell(r, b, q);
  const int j0 = w.preimage(b);
  if (j0 > r) {
    const Rational& coef = B[j0 * n + b];
    const Rational step = abs(cell.modulus / coef);
    for (Rational u = mod_rational((cell.offset - value) / coef, step); u < 1; u += step) {
      cur[j0 - r - 1] = u;
      solve_row(n, r, B, w, q, cur, b + 1, out);
    }
  } else if (in_coset(value, cell.offset, cell.modulus)) {
    solve_row(n, r, B, w, q, cur, b + 1, out);
  }
}

}  // namespace

void enumerate_grid(const KloostermanQuery& query, std::int64_t height, Budget& budget,
                    const RepVisitor& visit) {
  query.validate();
  require(height >= 1, "height bound must be positive");
  const int n = query.n;
  const WeylElement& w = query.w;
  const auto pattern = bruhat::u_w_pattern(w);
  const auto torus = query.cstar();
  const std::size_t npos = pattern.size();
  std::vector<std::int64_t> idx(npos, 0);
  std::vector<Rational> yv(npos);
  std::vector<Rational> B(n * n);
  std::vector<std::vector<std::vector<Rational>>> rows(n);
  while (true) {
    budget.charge();
    ExactMatrix y = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < npos; ++k) {
      yv[k] = exactalg::make_rational(idx[k], height);
      y(pattern.positions()[k].first, pattern.positions()[k].second) = yv[k];
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) B[j * n + k] = torus[j] * w.sign(j) * y(w.image(j), k);
    bool empty = false;
    for (int r = n - 1; r >= 0 && !empty; --r) {
      rows[r].clear();
      std::vector<Rational> cur(n - 1 - r);
      solve_row(n, r, B, w, query.q, cur, 0, rows[r]);
      empty = rows[r].empty();
    }
    if (!empty) {
      // Rows are independent once y is fixed: take the product.
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<Rational> xs;
        for (int r = 0; r < n; ++r)
          for (const auto& v : rows[r][pick[r]]) xs.push_back(v);
        visit(xs, yv);
        int r = 0;
        while (r < n && ++pick[r] == rows[r].size()) pick[r++] = 0;
        if (r == n) break;
      }
    }
    std::size_t k = 0;
    while (k < npos && ++idx[k] == height) idx[k++] = 0;
    if (k == npos) break;
  }
}

std::optional<std::int64_t> certified_height(const KloostermanQuery& query) {
  if (query.w.is_identity()) return 1;
  const auto long_perm = bruhat::special_weyl(query.n, bruhat::WeylKind::kWLong).permutation();
  if (query.n == 2 && query.w.permutation() == long_perm) return query.c[0];
  if (auto P = wstar_params_of(query)) {
    const int n = P->n, a = P->alpha, b = P->beta;
    const int e = std::max({n + a, (1 + a + b) * (n - 2), n - 2 + a});
    return exactalg::ipow(P->p, static_cast<unsigned>(e));
  }
  return std::nullopt;
}

}  // namespace gammaq::kloosterman
