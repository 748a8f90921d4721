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

#ifndef GAMMAQ_KLOOSTERMAN_QUERY_HPP
#define GAMMAQ_KLOOSTERMAN_QUERY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/exactalg/matrix.hpp"

namespace gammaq::kloosterman {

using bruhat::WeylElement;
using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::Rational;

// Parameters of S^v_{q,w}(M, N, c).  M, N, c are indexed from 1 in the usual
// notation and stored from position 0; v holds the diagonal signs.
struct KloostermanQuery {
  int n = 2;
  std::int64_t q = 1;
  WeylElement w;
  std::vector<int> v;
  std::vector<std::int64_t> M, N, c;

  static KloostermanQuery make(int n, std::int64_t q, const WeylElement& w, std::vector<std::int64_t> c,
                               std::vector<std::int64_t> M, std::vector<std::int64_t> N,
                               std::vector<int> v = {});
  void validate() const;
  // The torus entry c* = diag(1/c_{n-1}, ..., c_1).
  std::vector<Rational> cstar() const;
  std::string describe() const;
};

// Strictly-upper entries of x in row-major order, and the entries of y at
// the U_w pattern positions in pattern order.
using RepVisitor = std::function<void(const std::vector<Rational>& x, const std::vector<Rational>& y)>;

ExactMatrix x_from_entries(int n, const std::vector<Rational>& x);
ExactMatrix y_from_entries(const WeylElement& w, const std::vector<Rational>& y);

// Phase of theta_M(x) theta^v_N(y), reduced mod 1.
class PhaseEvaluator {
 public:
  explicit PhaseEvaluator(const KloostermanQuery& query);
  Rational operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  std::vector<std::pair<std::size_t, Rational>> x_weights_, y_weights_;
};

}  // namespace gammaq::kloosterman

#endif  // GAMMAQ_KLOOSTERMAN_QUERY_HPP
