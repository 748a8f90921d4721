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

#ifndef GAMMAQ_BRUHAT_COMPATIBILITY_HPP
#define GAMMAQ_BRUHAT_COMPATIBILITY_HPP

#include <cstdint>
#include <vector>

#include "gammaq/bruhat/weyl.hpp"

namespace gammaq::bruhat {

// M, N = (M_1, ..., M_{n-1}); v = diagonal signs (v_1, ..., v_n);
// c = (c_1, ..., c_{n-1}).  False for w not of block shape.  Otherwise checks
//   M_{n-i} c_{n-i+1} c_{n-i-1} / c_{n-i}^2 = (v_{w(i)+1} / v_{w(i)}) N_{n-w(i)}
// at every i with w(i) + 1 = w(i+1), with c_0 = c_n = 1.
bool compatibility(const WeylElement& w, const std::vector<std::int64_t>& M,
                   const std::vector<std::int64_t>& N, const std::vector<int>& v,
                   const std::vector<std::int64_t>& c);

}  // namespace gammaq::bruhat

#endif  // GAMMAQ_BRUHAT_COMPATIBILITY_HPP
