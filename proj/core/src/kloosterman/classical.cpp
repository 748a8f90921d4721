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

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {

void enumerate_classical_n2(const KloostermanQuery& query, Budget& budget, const RepVisitor& visit) {
  query.validate();
  require(query.n == 2 && query.w.permutation() == std::vector<int>{1, 0},
          "classical backend needs n = 2 and the long element");
  const std::int64_t c = query.c[0], q = query.q;
  // The lower-left entry c must lie in q^2 Z.
  if (c % (q * q) != 0) return;
  for (std::int64_t d = 0; d < c; ++d) {
    budget.charge();
    if (exactalg::gcd64(d, c) != 1 || exactalg::mod_floor(d - 1, q) != 0) continue;
    const std::int64_t a = exactalg::mod_inverse(d, c);
    visit({exactalg::make_rational(a, c)}, {exactalg::make_rational(d, c)});
  }
}

}  // namespace gammaq::kloosterman
