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

#ifndef GAMMAQ_KLOOSTERMAN_SUM_HPP
#define GAMMAQ_KLOOSTERMAN_SUM_HPP

#include <cstdint>
#include <string>

#include "gammaq/exactalg/phase_sum.hpp"
#include "gammaq/kloosterman/kloosterman_set.hpp"

namespace gammaq::kloosterman {

using exactalg::PhaseSum;

struct KloostermanResult {
  PhaseSum sum;
  bool compatible = true;
  // q not squarefree: the sum is still defined but lies outside the range
  // covered by the support and size theorems.
  bool outside_hypotheses = false;
  std::uint64_t set_size = 0;
  Method method = Method::kEchelon;
  bool complete = true;
};

// S^v_{q,w}(M, N, c).  Zero (with compatible = false) when the character
// compatibility fails or w is not of block shape; the set is not enumerated.
KloostermanResult kloosterman_sum(const KloostermanQuery& query, const SetOptions& options, Budget& budget);

// Sum over an existing set, for phases under a different (M, N, v).
PhaseSum sum_over_set(const KloostermanSet& set, const KloostermanQuery& phases);

}  // namespace gammaq::kloosterman

#endif  // GAMMAQ_KLOOSTERMAN_SUM_HPP
