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

#ifndef GAMMAQ_BRUHAT_WEYL_HPP
#define GAMMAQ_BRUHAT_WEYL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gammaq/exactalg/matrix.hpp"
#include "gammaq/exactalg/unipotent.hpp"

namespace gammaq::bruhat {

using exactalg::ExactMatrix;
using exactalg::Rational;
using exactalg::UnipotentPattern;

// Signed permutation matrix of determinant +1.  Row i has its nonzero entry
// in column image(i) (0-based), with sign sign(i).
class WeylElement {
 public:
  WeylElement() = default;
  // The sign, if needed for det = +1, goes into the first row.
  static WeylElement from_permutation(std::vector<int> perm);
  static WeylElement from_matrix(const ExactMatrix& m);

  int n() const { return static_cast<int>(perm_.size()); }
  int image(int i) const { return perm_[i]; }
  int preimage(int j) const { return inv_[j]; }
  int sign(int i) const { return sign_[i]; }
  const std::vector<int>& permutation() const { return perm_; }
  std::optional<int> sign_row() const;

  ExactMatrix to_matrix() const;
  WeylElement inverse() const;
  bool is_identity() const;
  // Block sizes (d_1, ..., d_r) when w is an anti-diagonal arrangement of
  // identity blocks, read from the top row block down.
  std::optional<std::vector<int>> block_type() const;
  std::string to_string() const;

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_ && sign_ == o.sign_; }

 private:
  std::vector<int> perm_, inv_, sign_;
};

enum class WeylKind { kIdentity, kWStar, kWLong, kVoronoiW1 };

WeylElement special_weyl(int n, WeylKind kind);
// "id", "wstar", "wl", "w1", "w1inv", or a 1-based permutation "3,1,2".
WeylElement weyl_from_name(int n, const std::string& name);
// Which special element w is, if any (by permutation).
std::optional<WeylKind> classify(const WeylElement& w);

// Positions (a, b), a < b, with w^{-1}(a) > w^{-1}(b): the support of
// w^{-1} U^T w cap U.
UnipotentPattern u_w_pattern(const WeylElement& w);

}  // namespace gammaq::bruhat

#endif  // GAMMAQ_BRUHAT_WEYL_HPP
