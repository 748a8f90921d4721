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

#include "gammaq/kloosterman/query.hpp"

#include <sstream>

#include "gammaq/bruhat/embeddings.hpp"
#include "gammaq/errors.hpp"

namespace gammaq::kloosterman {

KloostermanQuery KloostermanQuery::make(int n, std::int64_t q, const WeylElement& w,
                                        std::vector<std::int64_t> c, std::vector<std::int64_t> M,
                                        std::vector<std::int64_t> N, std::vector<int> v) {
  KloostermanQuery k;
  k.n = n;
  k.q = q;
  k.w = w;
  k.c = std::move(c);
  k.M = std::move(M);
  k.N = std::move(N);
  k.v = v.empty() ? std::vector<int>(static_cast<std::size_t>(n), 1) : std::move(v);
  k.validate();
  return k;
}

void KloostermanQuery::validate() const {
  require(n >= 2, "n must be at least 2");
  require(q >= 1, "level must be positive");
  require(w.n() == n, "Weyl element has the wrong dimension");
  const auto len = static_cast<std::size_t>(n - 1);
  require(M.size() == len && N.size() == len && c.size() == len, "M, N, c must have n-1 entries");
  require(v.size() == static_cast<std::size_t>(n), "v must have n entries");
  for (int s : v) require(s == 1 || s == -1, "v entries must be +1 or -1");
  for (auto x : c) require(x >= 1, "moduli must be positive");
}

std::vector<Rational> KloostermanQuery::cstar() const {
  std::vector<Rational> cr;
  for (auto x : c) cr.emplace_back(static_cast<long>(x));
  return bruhat::cstar_diagonal(cr);
}

std::string KloostermanQuery::describe() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::int64_t>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  };
  os << "n=" << n << " q=" << q << " w=" << w.to_string() << " c=";
  list(c);
  os << " M=";
  list(M);
  os << " N=";
  list(N);
  return os.str();
}

ExactMatrix x_from_entries(int n, const std::vector<Rational>& x) {
  ExactMatrix m = ExactMatrix::identity(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = x.at(k++);
  return m;
}

ExactMatrix y_from_entries(const WeylElement& w, const std::vector<Rational>& y) {
  const auto pattern = bruhat::u_w_pattern(w);
  ExactMatrix m = ExactMatrix::identity(w.n());
  std::size_t k = 0;
  for (const auto& [i, j] : pattern.positions()) m(i, j) = y.at(k++);
  return m;
}

PhaseEvaluator::PhaseEvaluator(const KloostermanQuery& query) {
  const int n = query.n;
  std::size_t off = 0;
  for (int i = 0; i + 1 < n; ++i) {
    x_weights_.emplace_back(off, Rational(static_cast<long>(query.M[n - 2 - i])));
    off += static_cast<std::size_t>(n - 1 - i);
  }
  const auto pattern = bruhat::u_w_pattern(query.w);
  std::size_t k = 0;
  for (const auto& [i, j] : pattern.positions()) {
    if (j == i + 1) {
      const long sign = query.v[i] * query.v[j];
      y_weights_.emplace_back(k, Rational(sign * static_cast<long>(query.N[n - 2 - i])));
    }
    ++k;
  }
}

Rational PhaseEvaluator::operator()(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Rational phase = 0;
  for (const auto& [k, m] : x_weights_) phase += m * x[k];
  for (const auto& [k, m] : y_weights_) phase += m * y[k];
  return exactalg::frac_part(phase);
}

}  // namespace gammaq::kloosterman
