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


#ifndef GAMMAQ_LATCOUNT_BALL_HPP
#define GAMMAQ_LATCOUNT_BALL_HPP

#include <cstdint>
#include <string>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/rational.hpp"

namespace gammaq::latcount {

using exactalg::Integer;
using exactalg::Rational;

enum class Norm { kMax, kFrobenius };

struct BallCountReport {
  int n = 2;
  std::int64_t q = 1;
  std::int64_t T = 1;
  Norm norm = Norm::kMax;
  Integer count;
  Rational main_term;       // T^{n(n-1)} / V_q
  Rational secondary_term;  // T^{n(n-1)/2}
  Rational ratio;           // count / (main + secondary)
};

// Number of g in Gamma(q), n in {2, 3}, with norm at most T.  The max norm
// is the entrywise maximum; the Frobenius norm compares sum g_ij^2 to T^2.
BallCountReport count_ball(int n, std::int64_t q, std::int64_t T, Budget& budget, Norm norm = Norm::kMax);

struct BallShapes {
  Rational upper;  // T^{n(n-1)} / q^{n^2-1} + T^{n(n-1)/2}
  Rational lower;  // T^{n(n-1)} / q^{n^2-1} + (T/q)^{n(n-1)/2} + 1
  double upper_with_epsilon = 0;  // (T q)^epsilon * upper
};

BallShapes predicted_ball_bound(int n, std::int64_t q, std::int64_t T, double epsilon);

std::string norm_name(Norm norm);
Norm norm_from_name(const std::string& name);

}  // namespace gammaq::latcount

#endif  // GAMMAQ_LATCOUNT_BALL_HPP
