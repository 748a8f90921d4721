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

#include "gammaq/bruhat/decompose.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/unipotent.hpp"

namespace gammaq::bruhat {

ExactMatrix BruhatData::recompose() const {
  return left_gamma * x * torus * w.to_matrix() * y * right_gamma;
}

std::vector<Rational> moduli_from_minors(const ExactMatrix& g, const WeylElement& w) {
  const int n = static_cast<int>(g.size());
  std::vector<Rational> c;
  for (int j = 1; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (int r = n - j; r < n; ++r) {
      rows.push_back(static_cast<std::size_t>(r));
      cols.push_back(static_cast<std::size_t>(w.image(r)));
    }
    std::sort(cols.begin(), cols.end());
    c.push_back(abs(g.minor(rows, cols)));
  }
  return c;
}

BruhatData bruhat_decompose(const ExactMatrix& g, bool normalize) {
  const int n = static_cast<int>(g.size());
  require(n >= 1, "empty matrix");
  if (g.determinant() == 0) throw PreconditionError("matrix is singular");

  // Rows of t*w*y are found bottom-up: row i of g minus the multiples of the
  // already reduced rows j > i that clear columns w(j), taken in the order
  // j = n-1, ..., i+1 (row j vanishes at columns w(k), k > j).
  ExactMatrix x = ExactMatrix::identity(n);
  std::vector<std::vector<Rational>> reduced(n);
  std::vector<int> perm(n, -1);
  std::vector<Rational> lead(n);
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Rational> r(n);
    for (int k = 0; k < n; ++k) r[k] = g(i, k);
    for (int j = n - 1; j > i; --j) {
      const Rational f = r[perm[j]] / lead[j];
      x(i, j) = f;
      if (f == 0) continue;
      for (int k = 0; k < n; ++k) r[k] -= f * reduced[j][k];
    }
    int col = 0;
    while (col < n && r[col] == 0) ++col;
    if (col == n) throw IntegrityError("Bruhat elimination produced a zero row");
    perm[i] = col;
    lead[i] = r[col];
    reduced[i] = std::move(r);
  }

  BruhatData out;
  out.w = WeylElement::from_permutation(perm);
  std::vector<Rational> t(n);
  for (int i = 0; i < n; ++i) t[i] = lead[i] / out.w.sign(i);
  out.torus = ExactMatrix::diagonal(t);
  out.y = ExactMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out.y(perm[i], k) = reduced[i][k] / lead[i];
  out.x = std::move(x);
  out.torus_sign.resize(n);
  for (int i = 0; i < n; ++i) out.torus_sign[i] = t[i] > 0 ? 1 : -1;

  Rational prod = 1;
  for (int j = 1; j < n; ++j) {
    prod *= t[n - j];
    out.c.push_back(abs(prod));
  }
  if (moduli_from_minors(g, out.w) != out.c) throw IntegrityError("moduli disagree with minors");
  if (!u_w_pattern(out.w).supports(out.y)) throw IntegrityError("y is not supported on U_w");

  out.left_gamma = ExactMatrix::identity(n);
  out.right_gamma = ExactMatrix::identity(n);
  if (normalize) {
    auto lf = exactalg::normal_form_left(out.x);
    out.left_gamma = std::move(lf.gamma);
    out.x = std::move(lf.reduced);
    auto rf = exactalg::normal_form_right(out.y, u_w_pattern(out.w));
    out.y = std::move(rf.reduced);
    out.right_gamma = std::move(rf.gamma);
  }
  return out;
}

}  // namespace gammaq::bruhat
