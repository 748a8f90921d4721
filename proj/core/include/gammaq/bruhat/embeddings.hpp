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

#ifndef GAMMAQ_BRUHAT_EMBEDDINGS_HPP
#define GAMMAQ_BRUHAT_EMBEDDINGS_HPP

#include <cstdint>
#include <vector>

#include "gammaq/bruhat/weyl.hpp"

namespace gammaq::bruhat {

// diag(1/c_{n-1}, c_{n-1}/c_{n-2}, ..., c_2/c_1, c_1) for c = (c_1, ..., c_{n-1}).
ExactMatrix cstar_embed(const std::vector<Rational>& c);
ExactMatrix cstar_embed(const std::vector<std::int64_t>& c);
std::vector<Rational> cstar_diagonal(const std::vector<Rational>& c);

// diag(y_{n-1} ... y_1, ..., y_2 y_1, y_1, 1)
ExactMatrix iota_embed(const std::vector<Rational>& y);
// (t_{n-1}/t_n, ..., t_1/t_2) for t = diag(t_1, ..., t_n)
std::vector<Rational> iwasawa_y(const ExactMatrix& t);
// iwasawa_y(w iota(y)^{-1} w^{-1})
std::vector<Rational> weyl_act_y(const WeylElement& w, const std::vector<Rational>& y);

}  // namespace gammaq::bruhat

#endif  // GAMMAQ_BRUHAT_EMBEDDINGS_HPP
