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

#ifndef GAMMAQ_BRUHAT_DECOMPOSE_HPP
#define GAMMAQ_BRUHAT_DECOMPOSE_HPP

#include <vector>

#include "gammaq/bruhat/weyl.hpp"

namespace gammaq::bruhat {

// g = left_gamma * x * torus * w * y * right_gamma, x in U(Q), y in U_w(Q).
// Without normalization both gammas are the identity.  c is recovered from
// |torus| and cross-checked against the bottom-row minors of g.
struct BruhatData {
  ExactMatrix x;
  ExactMatrix torus;
  WeylElement w;
  ExactMatrix y;
  std::vector<Rational> c;
  std::vector<int> torus_sign;
  ExactMatrix left_gamma;
  ExactMatrix right_gamma;

  ExactMatrix recompose() const;
};

BruhatData bruhat_decompose(const ExactMatrix& g, bool normalize = false);

// |det| of the minor on the last j rows and columns w(n-j+1..n), j = 1..n-1.
std::vector<Rational> moduli_from_minors(const ExactMatrix& g, const WeylElement& w);

}  // namespace gammaq::bruhat

#endif  // GAMMAQ_BRUHAT_DECOMPOSE_HPP
