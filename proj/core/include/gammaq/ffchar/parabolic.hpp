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


#ifndef GAMMAQ_FFCHAR_PARABOLIC_HPP
#define GAMMAQ_FFCHAR_PARABOLIC_HPP

#include <cstdint>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/rational.hpp"

namespace gammaq::ffchar {

using exactalg::Integer;
using exactalg::Rational;

Integer gl_order(int n, int p);

// |GL_n(F_p)| / |P(F_p)| for the standard parabolic with blocks parts:
// the Gaussian multinomial coefficient.
Integer flag_count(int n, const std::vector<int>& parts, int p);

// flag_count * prod dims.
Integer parabolic_dim_count(int n, const std::vector<int>& parts, int p, const std::vector<std::int64_t>& dims);

// |P(F_p) \ GL_n(F_p)| by enumerating GL_n(F_p) and collecting the row
// spaces of the trailing row blocks of each element.
Integer flag_count_by_orbits(int n, const std::vector<int>& parts, int p, Budget& budget);

// p^{(1/2) sum_{i != j} n_i n_j} and flag_count divided by it.
struct PowerDisplay {
  Integer power;
  Rational ratio;
};
PowerDisplay power_display(int n, const std::vector<int>& parts, int p);

}  // namespace gammaq::ffchar

#endif  // GAMMAQ_FFCHAR_PARABOLIC_HPP
