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


#include "gammaq/latcount/lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/groups/congruence.hpp"

namespace gammaq::latcount {

namespace {

std::int64_t det_mod(int n, const IntMatrix& g, std::int64_t q) {
  using exactalg::mul_mod;
  if (n == 2) return exactalg::mod_floor(mul_mod(g[0], g[3], q) - mul_mod(g[1], g[2], q), q);
  const std::int64_t a = mul_mod(g[0], exactalg::mod_floor(g[4] * g[8] - g[5] * g[7], q), q);
  const std::int64_t b = mul_mod(g[1], exactalg::mod_floor(g[3] * g[8] - g[5] * g[6], q), q);
  const std::int64_t c = mul_mod(g[2], exactalg::mod_floor(g[3] * g[7] - g[4] * g[6], q), q);
  return exactalg::mod_floor(a - b + c, q);
}

}  // namespace

ExactMatrix Lift::matrix(int n) const {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(gamma[static_cast<std::size_t>(i * n + j)]));
  return m;
}

Lift smallest_lift(int n, std::int64_t q, const IntMatrix& gbar, Budget& budget) {
  require(n == 2 || n == 3, "lifting supports n = 2 and n = 3");
  require(q >= 1, "level must be positive");
  require(gbar.size() == static_cast<std::size_t>(n * n), "residue matrix has the wrong size");
  IntMatrix r = gbar;
  for (auto& x : r) x = exactalg::mod_floor(x, q);
  require(det_mod(n, r, q) == 1 % q, "determinant must be 1 mod q");
  // No lift can beat the smallest representative of each entry.
  std::int64_t bound = 0;
  for (auto x : r) bound = std::max(bound, std::min(x, q - x));
  if (q == 1) bound = 1;
  bound = std::max<std::int64_t>(bound, 1);
  while (true) {
    const DetOneBox box(n, q, r, bound);
    Lift found;
    box.for_each(budget, [&](const IntMatrix& g) {
      found.gamma = g;
      return false;
    });
    if (!found.gamma.empty()) {
      for (auto x : found.gamma) found.norm = std::max(found.norm, x < 0 ? -x : x);
      return found;
    }
    ++bound;
  }
}

std::vector<IntMatrix> sl_mod_q(int n, std::int64_t q, Budget& budget) {
  require(n == 2 || n == 3, "only n = 2 and n = 3 are supported");
  require(q >= 1, "level must be positive");
  std::vector<IntMatrix> out;
  IntMatrix g(static_cast<std::size_t>(n * n), 0);
  while (true) {
    budget.charge();
    if (det_mod(n, g, q) == 1 % q) out.push_back(g);
    std::size_t k = g.size();
    bool advanced = false;
    while (k-- > 0) {
      if (g[k] + 1 < q) {
        ++g[k];
        advanced = true;
        break;
      }
      g[k] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

bool exceeds_threshold(std::int64_t norm, std::int64_t q, const Rational& exponent) {
  // norm^den > q^num
  const unsigned long den = exponent.get_den().get_ui();
  const unsigned long num = exponent.get_num().get_ui();
  return exactalg::pow_integer(Integer(static_cast<long>(norm)), den) >
         exactalg::pow_integer(Integer(static_cast<long>(q)), num);
}

LiftReport lifting_census(int n, std::int64_t q, const CensusOptions& options, Budget& budget) {
  require(n == 2 || n == 3, "lifting supports n = 2 and n = 3");
  require(q >= 1, "level must be positive");
  require(options.epsilon >= 0, "epsilon must be non-negative");
  LiftReport r;
  r.n = n;
  r.q = q;
  r.epsilon = options.epsilon;
  r.exponent = Rational(1) + Rational(1, n) + options.epsilon;
  r.exponent.canonicalize();
  r.threshold = std::pow(static_cast<double>(q), r.exponent.get_d());
  r.total = groups::index_sl(n, q);
  r.seed = options.seed;
  std::vector<IntMatrix> classes;
  if (r.total <= Integer(static_cast<unsigned long>(options.exhaustive_limit))) {
    classes = sl_mod_q(n, q, budget);
  } else {
    r.sampled = true;
    // Raw engine output reduced mod q keeps the sample identical across
    // standard libraries.
    std::mt19937_64 rng(options.seed);
    IntMatrix g(static_cast<std::size_t>(n * n));
    while (classes.size() < options.sample_size) {
      budget.charge();
      for (auto& x : g) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
      if (det_mod(n, g, q) == 1 % q) classes.push_back(g);
    }
  }
  for (auto& g : classes) {
    const Lift lift = smallest_lift(n, q, g, budget);
    r.classes.push_back({g, lift.norm});
    ++r.histogram[lift.norm];
    r.max_norm = std::max(r.max_norm, lift.norm);
    if (exceeds_threshold(lift.norm, q, r.exponent)) ++r.failure_count;
  }
  return r;
}

}  // namespace gammaq::latcount
