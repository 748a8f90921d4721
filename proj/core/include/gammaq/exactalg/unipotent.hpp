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

#ifndef GAMMAQ_EXACTALG_UNIPOTENT_HPP
#define GAMMAQ_EXACTALG_UNIPOTENT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gammaq/exactalg/matrix.hpp"

namespace gammaq::exactalg {

// A set of strictly-upper positions (0-based) closed under the group law,
// e.g. the free coordinates of a subgroup U_w of U.
class UnipotentPattern {
 public:
  UnipotentPattern() = default;
  UnipotentPattern(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> positions);

  static UnipotentPattern full(std::size_t n);

  std::size_t dimension() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& positions() const { return pos_; }
  bool contains(std::size_t i, std::size_t j) const { return mask_[i * n_ + j]; }
  std::size_t size() const { return pos_.size(); }
  bool empty() const { return pos_.empty(); }
  // True when y is unitriangular and vanishes off the pattern.
  bool supports(const ExactMatrix& y) const;

  bool operator==(const UnipotentPattern& o) const { return n_ == o.n_ && mask_ == o.mask_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pos_;  // sorted by (offset, row)
  std::vector<bool> mask_;
};

// I + k e_{ij}
ExactMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Integer& k);

struct LeftNormalForm {
  ExactMatrix gamma;    // in U(Z)
  ExactMatrix reduced;  // strictly-upper entries in [0, 1)
};

struct RightNormalForm {
  ExactMatrix reduced;  // free entries in [0, 1)
  ExactMatrix gamma;    // in U_w(Z) for the given pattern
};

// x = gamma * reduced.
LeftNormalForm normal_form_left(const ExactMatrix& x);
// y = reduced * gamma.
RightNormalForm normal_form_right(const ExactMatrix& y, const UnipotentPattern& pattern);

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_UNIPOTENT_HPP
