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


#ifndef GAMMAQ_LATCOUNT_DET_ONE_HPP
#define GAMMAQ_LATCOUNT_DET_ONE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "gammaq/errors.hpp"

namespace gammaq::latcount {

// Integer n x n matrix, row-major.
using IntMatrix = std::vector<std::int64_t>;

// Integer points s with lo_i <= s_i <= hi_i and sum s_i v_i = m.
struct BoxEquation {
  std::vector<std::int64_t> v, lo, hi;
  std::int64_t m = 0;
};

std::uint64_t count_box_solutions(const BoxEquation& eq, Budget& budget);
// Visits solutions in lexicographic order of the loop coordinates; stops when
// the visitor returns false.  Returns false if stopped early.
bool for_each_box_solution(const BoxEquation& eq, Budget& budget,
                           const std::function<bool(const std::vector<std::int64_t>&)>& visit);

// Matrices g in SL_n(Z), n in {2, 3}, with g = R mod q entrywise and
// max |g_ij| <= B.  The first n-1 rows run over their congruence boxes; the
// last row solves (last row) . (cofactor vector) = 1 within its box.
class DetOneBox {
 public:
  DetOneBox(int n, std::int64_t q, IntMatrix residues, std::int64_t bound);

  std::uint64_t count(Budget& budget) const;
  bool for_each(Budget& budget, const std::function<bool(const IntMatrix&)>& visit) const;

 private:
  // Calls f(prefix, equation) for every admissible first n-1 rows.
  bool scan(Budget& budget, const std::function<bool(const IntMatrix&, const BoxEquation&)>& f) const;

  int n_;
  std::int64_t q_, bound_;
  IntMatrix residues_;
};

}  // namespace gammaq::latcount

#endif  // GAMMAQ_LATCOUNT_DET_ONE_HPP
