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

#include "gammaq/bruhat/compatibility.hpp"

#include "gammaq/errors.hpp"

namespace gammaq::bruhat {

bool compatibility(const WeylElement& w, const std::vector<std::int64_t>& M,
                   const std::vector<std::int64_t>& N, const std::vector<int>& v,
                   const std::vector<std::int64_t>& c) {
  const int n = w.n();
  require(static_cast<int>(M.size()) == n - 1 && static_cast<int>(N.size()) == n - 1 &&
              static_cast<int>(v.size()) == n && static_cast<int>(c.size()) == n - 1,
          "compatibility: inconsistent lengths");
  if (!w.block_type()) return false;
  auto cc = [&](int k) -> Rational { return (k == 0 || k == n) ? Rational(1) : Rational(static_cast<long>(c[k - 1])); };
  for (int i = 1; i < n; ++i) {
    const int wi = w.image(i - 1) + 1;  // 1-based w(i)
    if (wi + 1 != w.image(i) + 1) continue;
    const Rational lhs = Rational(static_cast<long>(M[n - i - 1])) * cc(n - i + 1) * cc(n - i - 1) /
                         (cc(n - i) * cc(n - i));
    const Rational rhs = Rational(v[wi] * v[wi - 1]) * Rational(static_cast<long>(N[n - wi - 1]));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace gammaq::bruhat
