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

#include "gammaq/exactalg/unipotent.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq::exactalg {

UnipotentPattern::UnipotentPattern(std::size_t n,
                                   std::vector<std::pair<std::size_t, std::size_t>> positions)
    : n_(n), pos_(std::move(positions)), mask_(n * n, false) {
  for (const auto& [i, j] : pos_) {
    require(i < j && j < n, "pattern positions must be strictly upper");
    mask_[i * n + j] = true;
  }
  std::sort(pos_.begin(), pos_.end(), [](const auto& a, const auto& b) {
    const std::size_t da = a.second - a.first, db = b.second - b.first;
    return da != db ? da < db : a.first < b.first;
  });
  pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
}

UnipotentPattern UnipotentPattern::full(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return UnipotentPattern(n, std::move(p));
}

bool UnipotentPattern::supports(const ExactMatrix& y) const {
  if (y.size() != n_ || !y.is_upper_unitriangular()) return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!contains(i, j) && y(i, j) != 0) return false;
  return true;
}

ExactMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Integer& k) {
  ExactMatrix e = ExactMatrix::identity(n);
  e(i, j) = Rational(k);
  return e;
}

LeftNormalForm normal_form_left(const ExactMatrix& x) {
  require(x.is_upper_unitriangular(), "left normal form needs an upper unitriangular matrix");
  const std::size_t n = x.size();
  ExactMatrix gamma = ExactMatrix::identity(n);
  ExactMatrix r = x;
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const std::size_t j = i + d;
      const Integer k = floor_of(r(i, j));
      if (k == 0) continue;
      // row_i -= k * row_j; touches columns >= j only.
      for (std::size_t m = j; m < n; ++m) r(i, m) -= Rational(k) * r(j, m);
      // gamma <- gamma * E_ij(k): column j += k * column i.
      for (std::size_t m = 0; m <= i; ++m) gamma(m, j) += Rational(k) * gamma(m, i);
    }
  }
  return {std::move(gamma), std::move(r)};
}

RightNormalForm normal_form_right(const ExactMatrix& y, const UnipotentPattern& pattern) {
  require(pattern.dimension() == y.size(), "pattern dimension mismatch");
  require(pattern.supports(y), "matrix is not supported on the unipotent pattern");
  const std::size_t n = y.size();
  ExactMatrix gamma = ExactMatrix::identity(n);
  ExactMatrix r = y;
  for (const auto& [i, j] : pattern.positions()) {
    const Integer k = floor_of(r(i, j));
    if (k == 0) continue;
    // column_j -= k * column_i; touches rows <= i only.
    for (std::size_t m = 0; m <= i; ++m) r(m, j) -= Rational(k) * r(m, i);
    // gamma <- E_ij(k) * gamma: row i += k * row j.
    for (std::size_t m = j; m < n; ++m) gamma(i, m) += Rational(k) * gamma(j, m);
  }
  return {std::move(r), std::move(gamma)};
}

}  // namespace gammaq::exactalg
