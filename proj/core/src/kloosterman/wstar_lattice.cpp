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

#include <algorithm>
#include <cmath>

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {
namespace {

using exactalg::ipow;
using Wide = __int128;

// One scanned coordinate: numerator k/p^den over [0, p^den), or, for the
// corner entries, (1 + p t)/p^den with t in [0, p^{den-1}).
struct Coord {
  bool is_x;
  int i, j;  // 0-based position
  int den;
  bool corner;
  std::int64_t range;
};

std::vector<Coord> coordinates(const WstarParams& P) {
  const int n = P.n, a = P.alpha, b = P.beta;
  std::vector<Coord> cs;
  auto add = [&](bool is_x, int i, int j, int den, bool corner = false) {
    const std::int64_t range = ipow(P.p, static_cast<unsigned>(corner ? den - 1 : den));
    cs.push_back({is_x, i - 1, j - 1, den, corner, range});
  };
  for (int j = 2; j <= n - 1; ++j) {
    add(true, 1, j, j - 1 + a + b);
    add(false, 1, j, j - 1 + a);
  }
  for (int i = 2; i <= n - 1; ++i) {
    add(true, i, n, n - i + a);
    add(false, i, n, (1 + a + b) * (n - i));
  }
  add(true, 1, n, n + a, true);
  add(false, 1, n, n + a, true);
  for (int i = 2; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) add(true, i, j, j - i - 1 + a + b);
  return cs;
}

}  // namespace

std::vector<std::int64_t> WstarParams::moduli() const {
  std::vector<std::int64_t> c;
  for (int j = 1; j <= n - 1; ++j) c.push_back(ipow(p, static_cast<unsigned>(n + alpha + beta * (j - 1))));
  return c;
}

Integer wstar_candidate_count(const WstarParams& params) {
  Integer total = 1;
  for (const auto& c : coordinates(params)) total *= Integer(static_cast<long>(c.range));
  return total;
}

std::optional<WstarParams> wstar_params_of(const KloostermanQuery& query) {
  if (query.n < 3 || !exactalg::is_prime(query.q)) return std::nullopt;
  if (query.w.permutation() != bruhat::special_weyl(query.n, bruhat::WeylKind::kWStar).permutation())
    return std::nullopt;
  const std::int64_t p = query.q;
  const int e1 = exactalg::valuation(query.c[0], p);
  if (ipow(p, static_cast<unsigned>(e1)) != query.c[0] || e1 < query.n) return std::nullopt;
  int beta = 0;
  if (query.n >= 3 && query.c.size() >= 2) {
    const int e2 = exactalg::valuation(query.c[1], p);
    if (ipow(p, static_cast<unsigned>(e2)) != query.c[1] || e2 < e1) return std::nullopt;
    beta = e2 - e1;
  }
  WstarParams P{query.n, p, e1 - query.n, beta};
  if (P.moduli() != query.c) return std::nullopt;
  return P;
}

void enumerate_wstar_lattice(const WstarParams& P, Budget& budget, const RepVisitor& visit) {
  require(P.n >= 3, "the w_* lattice needs n >= 3");
  require(exactalg::is_prime(P.p), "p must be prime");
  require(P.alpha >= 0 && P.beta >= 0, "alpha, beta must be non-negative");
  const int n = P.n;
  const auto coords = coordinates(P);
  const bruhat::WeylElement w = bruhat::special_weyl(n, bruhat::WeylKind::kWStar);
  const auto pattern = bruhat::u_w_pattern(w);

  // Fixed-point scaling: every coordinate is V / p^K.  The torus entry j is
  // p^{e_j}; shift by E0 so all powers are non-negative.  Then
  //   g_ik * p^L = sum_j X_ij * s_j * p^{e_j + E0} * Y_{w(j) k},  L = 2K + E0.
  int K = 0;
  for (const auto& c : coords) K = std::max(K, c.den);
  std::vector<int> e(n);
  e[0] = -(n + P.alpha + P.beta * (n - 2));
  for (int j = 1; j < n - 1; ++j) e[j] = P.beta;
  e[n - 1] = n + P.alpha;
  int E0 = 0;
  for (int x : e) E0 = std::max(E0, -x);
  const int L = 2 * K + E0;
  int top = 0;
  for (int x : e) top = std::max(top, x + E0);
  const double bits = std::log2(static_cast<double>(P.p)) * std::max(2 * K + top + 2, L + n);
  require(bits < 120, "w_* lattice parameters too large for fixed-point scan");

  auto powp = [&](int k) -> Wide {
    Wide r = 1;
    for (int t = 0; t < k; ++t) r *= P.p;
    return r;
  };
  const Wide pK = powp(K);
  std::vector<Wide> tcoef(n);
  for (int j = 0; j < n; ++j) tcoef[j] = w.sign(j) * powp(e[j] + E0);
  std::vector<Wide> cell_mod(n * n), cell_off(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      cell_mod[i * n + k] = powp(L + 1 + i - k);
      cell_off[i * n + k] = i == k ? powp(L) : 0;
    }
  std::vector<Wide> scale(coords.size());
  for (std::size_t t = 0; t < coords.size(); ++t) scale[t] = powp(K - coords[t].den);

  std::vector<Wide> X(n * n, 0), Y(n * n, 0);
  for (int i = 0; i < n; ++i) X[i * n + i] = Y[i * n + i] = pK;
  std::vector<std::int64_t> idx(coords.size(), 0);
  auto numerator = [&](std::size_t t) -> std::int64_t {
    return coords[t].corner ? 1 + P.p * idx[t] : idx[t];
  };
  auto load = [&](std::size_t t) {
    Wide v = static_cast<Wide>(numerator(t)) * scale[t];
    (coords[t].is_x ? X : Y)[coords[t].i * n + coords[t].j] = v;
  };
  for (std::size_t t = 0; t < coords.size(); ++t) load(t);

  std::vector<Wide> XT(n * n);
  while (true) {
    budget.charge();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) XT[i * n + j] = X[i * n + j] * tcoef[j];
    bool ok = true;
    for (int i = n - 1; i >= 0 && ok; --i)
      for (int k = 0; k < n && ok; ++k) {
        Wide g = 0;
        for (int j = i; j < n; ++j) g += XT[i * n + j] * Y[w.image(j) * n + k];
        const Wide r = (g - cell_off[i * n + k]) % cell_mod[i * n + k];
        ok = r == 0;
      }
    if (ok) {
      std::vector<Rational> xs, ys;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) xs.emplace_back(static_cast<long>(X[i * n + j]), static_cast<long>(pK));
      for (const auto& [a, b] : pattern.positions())
        ys.emplace_back(static_cast<long>(Y[a * n + b]), static_cast<long>(pK));
      for (auto& v : xs) v.canonicalize();
      for (auto& v : ys) v.canonicalize();
      visit(xs, ys);
    }
    std::size_t t = 0;
    while (t < coords.size()) {
      if (++idx[t] < coords[t].range) {
        load(t);
        break;
      }
      idx[t] = 0;
      load(t);
      ++t;
    }
    if (t == coords.size()) break;
  }
}

}  // namespace gammaq::kloosterman
