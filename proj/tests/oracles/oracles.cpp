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


#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace oracle {

i64 gcd(i64 a, i64 b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    const i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 floor_mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 inverse_mod(i64 a, i64 m) {
  a = floor_mod(a, m);
  for (i64 x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  if (m == 1) return 0;
  throw std::invalid_argument("not invertible");
}

i64 power(i64 b, int e) {
  i64 r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

PhaseMultiset classical_kloosterman(i64 m, i64 n, i64 c) {
  PhaseMultiset out;
  for (i64 d = 0; d < c; ++d) {
    if (gcd(d, c) != 1) continue;
    const i64 dbar = inverse_mod(d, c);
    const i64 num = floor_mod(m * d + n * dbar, c);
    const i64 g = gcd(num, c);
    ++out[{num / g, c / g}];
  }
  return out;
}

i64 trivial_weyl_value(int n, i64 q, const std::vector<i64>& M, const std::vector<i64>& N,
                       const std::vector<i64>& c) {
  for (i64 x : c)
    if (x != 1) return 0;
  if (M != N) return 0;
  return power(q, n * (n - 1) * (n - 2) / 6);
}

namespace {

// Determinant by cofactor expansion along the first row.
i64 det(const std::vector<i64>& a, int n) {
  if (n == 1) return a[0];
  i64 total = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<i64> minor;
    for (int r = 1; r < n; ++r)
      for (int k = 0; k < n; ++k)
        if (k != j) minor.push_back(a[static_cast<std::size_t>(r * n + k)]);
    const i64 sign = j % 2 == 0 ? 1 : -1;
    total += sign * a[static_cast<std::size_t>(j)] * det(minor, n - 1);
  }
  return total;
}

}  // namespace

i64 sl_mod_q_count(int n, i64 q) {
  if (q == 1) return 1;
  const int cells = (n - 1) * n;
  std::vector<i64> top(static_cast<std::size_t>(cells), 0);
  i64 unimodular = 0;
  while (true) {
    // Cofactors of the last row.
    i64 g = q;
    for (int j = 0; j < n; ++j) {
      std::vector<i64> full(top);
      for (int k = 0; k < n; ++k) full.push_back(k == j ? 1 : 0);
      g = gcd(g, floor_mod(det(full, n), q));
    }
    if (g == 1) ++unimodular;
    int k = 0;
    while (k < cells && ++top[static_cast<std::size_t>(k)] == q) top[static_cast<std::size_t>(k++)] = 0;
    if (k == cells) break;
  }
  return unimodular * power(q, n - 1);
}

i64 unipotent_coset_count(int n, i64 q) {
  const i64 L = power(q, n - 1);  // common denominator
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<i64> limit, idx(cells.size(), 0);
  for (auto [i, j] : cells) limit.push_back(power(q, j - i));
  // A fixed integral unipotent used to move each grid point off its normal form.
  std::vector<i64> gamma(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) gamma[static_cast<std::size_t>(i * n + j)] = i == j ? 1 : (i + 2 * j) % 3 - 1;
  std::set<std::vector<i64>> forms;
  while (true) {
    // x_ij = idx / q^{j-i}; the conjugate entry q^{j-i} x_ij = idx must be 0 mod q.
    bool member = true;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (idx[k] % q != 0) member = false;
    if (member) {
      std::vector<i64> x(static_cast<std::size_t>(n * n), 0);
      for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i * n + i)] = L;
      for (std::size_t k = 0; k < cells.size(); ++k)
        x[static_cast<std::size_t>(cells[k].first * n + cells[k].second)] = idx[k] * (L / limit[k]);
      std::vector<i64> y(static_cast<std::size_t>(n * n), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            y[static_cast<std::size_t>(i * n + j)] +=
                gamma[static_cast<std::size_t>(i * n + k)] * x[static_cast<std::size_t>(k * n + j)];
      for (int i = n - 2; i >= 0; --i)
        for (int k = i + 1; k < n; ++k) {
          const i64 v = y[static_cast<std::size_t>(i * n + k)];
          const i64 t = (v - floor_mod(v, L)) / L;
          for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(i * n + j)] -= t * y[static_cast<std::size_t>(k * n + j)];
        }
      forms.insert(y);
    }
    std::size_t k = 0;
    while (k < cells.size() && ++idx[k] == limit[k]) idx[k++] = 0;
    if (k == cells.size()) break;
  }
  return static_cast<i64>(forms.size());
}

std::vector<i64> ball_counts(int n, i64 q, i64 t_max) {
  if (n != 2 && n != 3) throw std::invalid_argument("ball_counts needs n = 2 or 3");
  const int cells = n * n;
  std::vector<std::vector<i64>> choice(static_cast<std::size_t>(cells));
  for (int k = 0; k < cells; ++k) {
    const bool diag = k % (n + 1) == 0;
    for (i64 x = -t_max; x <= t_max; ++x)
      if (floor_mod(x - (diag ? 1 : 0), q) == 0) choice[static_cast<std::size_t>(k)].push_back(x);
  }
  std::vector<i64> hist(static_cast<std::size_t>(t_max + 1), 0);
  const int head = cells - n;  // entries outside the last row
  std::vector<std::size_t> idx(static_cast<std::size_t>(head), 0);
  std::vector<i64> a(static_cast<std::size_t>(cells), 0);
  while (true) {
    i64 top_norm = 0;
    for (int k = 0; k < head; ++k) {
      a[static_cast<std::size_t>(k)] = choice[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
      top_norm = std::max(top_norm, std::abs(a[static_cast<std::size_t>(k)]));
    }
    // Cofactors of the last row.
    i64 cof[3] = {0, 0, 0};
    if (n == 2) {
      cof[0] = -a[1];
      cof[1] = a[0];
    } else {
      cof[0] = a[1] * a[5] - a[2] * a[4];
      cof[1] = a[2] * a[3] - a[0] * a[5];
      cof[2] = a[0] * a[4] - a[1] * a[3];
    }
    const auto& c0 = choice[static_cast<std::size_t>(head)];
    const auto& c1 = choice[static_cast<std::size_t>(head + 1)];
    if (n == 2) {
      for (i64 x : c0)
        for (i64 y : c1)
          if (x * cof[0] + y * cof[1] == 1)
            ++hist[static_cast<std::size_t>(std::max({top_norm, std::abs(x), std::abs(y)}))];
    } else {
      const auto& c2 = choice[static_cast<std::size_t>(head + 2)];
      for (i64 x : c0)
        for (i64 y : c1)
          for (i64 z : c2)
            if (x * cof[0] + y * cof[1] + z * cof[2] == 1)
              ++hist[static_cast<std::size_t>(std::max({top_norm, std::abs(x), std::abs(y), std::abs(z)}))];
    }
    int k = 0;
    while (k < head && ++idx[static_cast<std::size_t>(k)] == choice[static_cast<std::size_t>(k)].size())
      idx[static_cast<std::size_t>(k++)] = 0;
    if (k == head) break;
  }
  for (std::size_t t = 1; t < hist.size(); ++t) hist[t] += hist[t - 1];
  return hist;
}

std::map<std::vector<i64>, i64> min_lift_norms(i64 q, i64 bound) {
  std::map<std::vector<i64>, i64> best;
  auto record = [&](i64 a, i64 b, i64 c, i64 d) {
    const i64 norm = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    const std::vector<i64> key{floor_mod(a, q), floor_mod(b, q), floor_mod(c, q), floor_mod(d, q)};
    auto it = best.find(key);
    if (it == best.end() || norm < it->second) best[key] = norm;
  };
  for (i64 a = -bound; a <= bound; ++a)
    for (i64 b = -bound; b <= bound; ++b)
      for (i64 c = -bound; c <= bound; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (i64 d = -bound; d <= bound; ++d) record(a, b, c, d);
          continue;
        }
        const i64 num = 1 + b * c;
        if (num % a != 0) continue;
        const i64 d = num / a;
        if (std::abs(d) <= bound) record(a, b, c, d);
      }
  return best;
}

namespace {

int valuation(i64 x, i64 p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// q^e | x, checked prime by prime.
bool divides_power(i64 q, int e, i64 x) {
  i64 rest = q;
  for (i64 p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    const int vq = valuation(rest, p);
    while (rest % p == 0) rest /= p;
    if (valuation(x, p) < e * vq) return false;
  }
  return true;
}

}  // namespace

bool divisibility_holds(WeylCase w, i64 q, i64 c1, i64 c2) {
  switch (w) {
    case WeylCase::kWStar:
      return divides_power(q, 3, c1) && divides_power(q, 3, c2);
    case WeylCase::kGeneric:
      return divides_power(q, 4, c1) || divides_power(q, 4, c2);
    case WeylCase::kVoronoi: {
      // c = (m g^2, g) with (m, q) = 1 forces q^4 | g^2; other c carry no condition.
      const i64 g = c2;
      if (c1 % (g * g) != 0) return true;
      if (gcd(c1 / (g * g), q) != 1) return true;
      return divides_power(q, 4, g * g);
    }
  }
  return false;
}

i64 flag_count_f3(const std::vector<int>& parts, int p) {
  const int n = 3;
  const int size = p * p * p;
  auto coords = [&](int v) { return std::vector<int>{v % p, (v / p) % p, v / (p * p)}; };
  auto index = [&](const std::vector<int>& c) { return c[0] + p * c[1] + p * p * c[2]; };
  // Subspaces as bitmasks of their vectors, generated by spans of up to three vectors.
  std::set<std::uint32_t> subspaces;
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      for (int w = 0; w < size; ++w) {
        std::uint32_t mask = 0;
        const auto cu = coords(u), cv = coords(v), cw = coords(w);
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
              std::vector<int> s(3);
              for (int k = 0; k < 3; ++k) s[static_cast<std::size_t>(k)] = (a * cu[k] + b * cv[k] + c * cw[k]) % p;
              mask |= 1u << index(s);
            }
        subspaces.insert(mask);
      }
  auto dim = [&](std::uint32_t mask) {
    int count = __builtin_popcount(mask), d = 0;
    while (count > 1) {
      count /= p;
      ++d;
    }
    return d;
  };
  std::vector<int> dims;
  int acc = 0;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) dims.push_back(acc += parts[k]);
  if (acc + parts.back() != n) throw std::invalid_argument("parts must sum to 3");
  // Count chains level by level.
  std::map<std::uint32_t, i64> chains{{1u, 1}};  // the zero subspace
  for (int d : dims) {
    std::map<std::uint32_t, i64> next;
    for (std::uint32_t s : subspaces) {
      if (dim(s) != d) continue;
      for (const auto& [prev, count] : chains)
        if ((prev & s) == prev) next[s] += count;
    }
    chains = std::move(next);
  }
  i64 total = 0;
  for (const auto& [s, count] : chains) total += count;
  return total;
}

namespace {

int rank_mod_p(std::vector<i64> a, int n, int p) {
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[static_cast<std::size_t>(i * n + c)] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(r * n + j)]);
    const i64 inv = inverse_mod(a[static_cast<std::size_t>(r * n + c)], p);
    for (int i = 0; i < n; ++i) {
      if (i == r) continue;
      const i64 f = floor_mod(a[static_cast<std::size_t>(i * n + c)] * inv, p);
      for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i * n + j)] =
            floor_mod(a[static_cast<std::size_t>(i * n + j)] - f * a[static_cast<std::size_t>(r * n + j)], p);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<int> jordan_type(const std::vector<i64>& u, int n, int p) {
  std::vector<i64> nil(u);
  for (int i = 0; i < n; ++i) nil[static_cast<std::size_t>(i * n + i)] -= 1;
  std::vector<int> ranks{n};
  std::vector<i64> pw(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) pw[static_cast<std::size_t>(i * n + i)] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<i64> next(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          next[static_cast<std::size_t>(i * n + j)] = floor_mod(
              next[static_cast<std::size_t>(i * n + j)] + pw[static_cast<std::size_t>(i * n + l)] * nil[static_cast<std::size_t>(l * n + j)], p);
    pw = std::move(next);
    ranks.push_back(rank_mod_p(pw, n, p));
  }
  // Blocks of size >= k: ranks[k-1] - ranks[k].
  std::vector<int> at_least;
  for (int k = 1; k <= n; ++k) at_least.push_back(ranks[static_cast<std::size_t>(k - 1)] - ranks[static_cast<std::size_t>(k)]);
  std::vector<int> type;
  for (int k = n; k >= 1; --k) {
    const int exactly = at_least[static_cast<std::size_t>(k - 1)] - (k < n ? at_least[static_cast<std::size_t>(k)] : 0);
    for (int t = 0; t < exactly; ++t) type.push_back(k);
  }
  return type;
}

AverageResult gelfand_graev_average(int n, int p, const std::map<std::vector<int>, i64>& chi,
                                    const std::vector<i64>& twist) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  std::vector<i64> coeff(static_cast<std::size_t>(p), 0);
  std::vector<i64> idx(cells.size(), 0);
  while (true) {
    std::vector<i64> u(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i * n + i)] = 1;
    i64 phase = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [i, j] = cells[k];
      u[static_cast<std::size_t>(i * n + j)] = idx[k];
      if (j == i + 1) {
        const i64 a = twist.empty() ? 1 : twist[static_cast<std::size_t>(i)];
        phase -= a * idx[k];
      }
    }
    const auto type = jordan_type(u, n, p);
    auto it = chi.find(type);
    if (it == chi.end()) throw std::invalid_argument("character value missing for a Jordan type");
    coeff[static_cast<std::size_t>(floor_mod(phase, p))] += it->second;
    std::size_t k = 0;
    while (k < cells.size() && ++idx[k] == p) idx[k++] = 0;
    if (k == cells.size()) break;
  }
  AverageResult r;
  r.denominator = power(p, n * (n - 1) / 2);
  r.rational = std::all_of(coeff.begin() + 1, coeff.end(), [&](i64 c) { return c == coeff[1]; });
  // 1 + zeta + ... + zeta^{p-1} = 0 is the only relation among the p-th roots.
  if (r.rational) r.numerator = coeff[0] - coeff[1];
  return r;
}

}  // namespace oracle
