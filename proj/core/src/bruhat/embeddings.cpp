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

#include "gammaq/bruhat/embeddings.hpp"

#include "gammaq/errors.hpp"

namespace gammaq::bruhat {

std::vector<Rational> cstar_diagonal(const std::vector<Rational>& c) {
  const std::size_t n = c.size() + 1;
  for (const auto& v : c) require(v > 0, "moduli must be positive");
  // Entry j (1-based) is c_{n-j+1}/c_{n-j} with c_0 = c_n = 1.
  auto at = [&](std::size_t k) -> Rational { return (k == 0 || k == n) ? Rational(1) : c[k - 1]; };
  std::vector<Rational> d(n);
  for (std::size_t j = 1; j <= n; ++j) d[j - 1] = at(n - j + 1) / at(n - j);
  return d;
}

ExactMatrix cstar_embed(const std::vector<Rational>& c) { return ExactMatrix::diagonal(cstar_diagonal(c)); }

ExactMatrix cstar_embed(const std::vector<std::int64_t>& c) {
  std::vector<Rational> r;
  for (auto v : c) r.emplace_back(static_cast<long>(v));
  return cstar_embed(r);
}

ExactMatrix iota_embed(const std::vector<Rational>& y) {
  const std::size_t n = y.size() + 1;
  for (const auto& v : y) require(v > 0, "iota expects positive entries");
  std::vector<Rational> d(n, Rational(1));
  // d_j = y_1 ... y_{n-j} (1-based j)
  for (std::size_t j = n - 1; j-- > 0;) d[j] = d[j + 1] * y[n - 2 - j];
  return ExactMatrix::diagonal(d);
}

std::vector<Rational> iwasawa_y(const ExactMatrix& t) {
  require(t.is_diagonal(), "iwasawa_y expects a diagonal matrix");
  const std::size_t n = t.size();
  std::vector<Rational> y(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    require(t(n - k - 1, n - k - 1) > 0 && t(n - k, n - k) > 0, "iwasawa_y expects a positive diagonal");
    y[k - 1] = t(n - k - 1, n - k - 1) / t(n - k, n - k);
  }
  return y;
}

std::vector<Rational> weyl_act_y(const WeylElement& w, const std::vector<Rational>& y) {
  const ExactMatrix m = w.to_matrix();
  return iwasawa_y(m * iota_embed(y).inverse() * m.inverse());
}

}  // namespace gammaq::bruhat
