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


#include "gammaq/latcount/det_one.hpp"

#include <optional>

#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::latcount {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

struct Interval {
  i128 lo, hi;
  bool empty() const { return lo > hi; }
};

// k with lo <= s0 + k d <= hi.
Interval k_range(i128 s0, i128 d, i128 lo, i128 hi, i128 klo, i128 khi) {
  if (d == 0) {
    if (s0 < lo || s0 > hi) return {1, 0};
    return {klo, khi};
  }
  i128 a = d > 0 ? ceil_div(lo - s0, d) : ceil_div(hi - s0, d);
  i128 b = d > 0 ? floor_div(hi - s0, d) : floor_div(lo - s0, d);
  return {std::max(a, klo), std::min(b, khi)};
}

// Solutions of va x + vb y = rhs in the boxes, as x = x0 + k dx, y = y0 + k dy.
struct Progression {
  bool all = false;  // va = vb = 0 and rhs = 0: the whole box
  bool none = false;
  i128 x0 = 0, y0 = 0, dx = 0, dy = 0;
  Interval k{1, 0};
};

Progression solve_pair(std::int64_t va, std::int64_t vb, i128 rhs, std::int64_t xlo, std::int64_t xhi,
                       std::int64_t ylo, std::int64_t yhi) {
  Progression p;
  if (xlo > xhi || ylo > yhi) {
    p.none = true;
    return p;
  }
  if (va == 0 && vb == 0) {
    if (rhs == 0)
      p.all = true;
    else
      p.none = true;
    return p;
  }
  const auto e = exactalg::extended_gcd(va, vb);
  if (rhs % e.g != 0) {
    p.none = true;
    return p;
  }
  const i128 f = rhs / e.g;
  p.x0 = static_cast<i128>(e.s) * f;
  p.y0 = static_cast<i128>(e.t) * f;
  p.dx = vb / e.g;
  p.dy = -(va / e.g);
  // Keep the particular solution small before intersecting.
  if (p.dx != 0) {
    const i128 shift = floor_div(p.x0 - xlo, p.dx);
    p.x0 -= shift * p.dx;
    p.y0 -= shift * p.dy;
  } else if (p.dy != 0) {
    const i128 shift = floor_div(p.y0 - ylo, p.dy);
    p.x0 -= shift * p.dx;
    p.y0 -= shift * p.dy;
  }
  const i128 big = static_cast<i128>(1) << 100;
  Interval k = k_range(p.x0, p.dx, xlo, xhi, -big, big);
  k = k_range(p.y0, p.dy, ylo, yhi, k.lo, k.hi);
  p.k = k;
  if (k.empty()) p.none = true;
  return p;
}

}  // namespace

std::uint64_t count_box_solutions(const BoxEquation& eq, Budget& budget) {
  const std::size_t len = eq.v.size();
  require(len >= 2 && eq.lo.size() == len && eq.hi.size() == len, "box equation needs at least two unknowns");
  std::uint64_t total = 0;
  std::vector<std::int64_t> s(len - 2);
  // Odometer over the leading coordinates.
  for (std::size_t i = 0; i + 2 < len; ++i) {
    if (eq.lo[i] > eq.hi[i]) return 0;
    s[i] = eq.lo[i];
  }
  while (true) {
    budget.charge();
    i128 rhs = eq.m;
    for (std::size_t i = 0; i + 2 < len; ++i) rhs -= static_cast<i128>(s[i]) * eq.v[i];
    const auto p = solve_pair(eq.v[len - 2], eq.v[len - 1], rhs, eq.lo[len - 2], eq.hi[len - 2], eq.lo[len - 1],
                              eq.hi[len - 1]);
    if (p.all)
      total += static_cast<std::uint64_t>(eq.hi[len - 2] - eq.lo[len - 2] + 1) *
               static_cast<std::uint64_t>(eq.hi[len - 1] - eq.lo[len - 1] + 1);
    else if (!p.none)
      total += static_cast<std::uint64_t>(p.k.hi - p.k.lo + 1);
    std::size_t i = 0;
    for (; i + 2 < len; ++i) {
      if (s[i] < eq.hi[i]) {
        ++s[i];
        break;
      }
      s[i] = eq.lo[i];
    }
    if (i + 2 >= len) break;
  }
  return total;
}

bool for_each_box_solution(const BoxEquation& eq, Budget& budget,
                           const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  const std::size_t len = eq.v.size();
  require(len >= 2 && eq.lo.size() == len && eq.hi.size() == len, "box equation needs at least two unknowns");
  std::vector<std::int64_t> s(len);
  for (std::size_t i = 0; i + 2 < len; ++i) {
    if (eq.lo[i] > eq.hi[i]) return true;
    s[i] = eq.lo[i];
  }
  while (true) {
    budget.charge();
    i128 rhs = eq.m;
    for (std::size_t i = 0; i + 2 < len; ++i) rhs -= static_cast<i128>(s[i]) * eq.v[i];
    const auto p = solve_pair(eq.v[len - 2], eq.v[len - 1], rhs, eq.lo[len - 2], eq.hi[len - 2], eq.lo[len - 1],
                              eq.hi[len - 1]);
    if (p.all) {
      for (std::int64_t x = eq.lo[len - 2]; x <= eq.hi[len - 2]; ++x)
        for (std::int64_t y = eq.lo[len - 1]; y <= eq.hi[len - 1]; ++y) {
          budget.charge();
          s[len - 2] = x;
          s[len - 1] = y;
          if (!visit(s)) return false;
        }
    } else if (!p.none) {
      // Increasing x.
      const bool up = p.dx >= 0;
      for (i128 t = 0; t <= p.k.hi - p.k.lo; ++t) {
        budget.charge();
        const i128 k = up ? p.k.lo + t : p.k.hi - t;
        s[len - 2] = static_cast<std::int64_t>(p.x0 + k * p.dx);
        s[len - 1] = static_cast<std::int64_t>(p.y0 + k * p.dy);
        if (!visit(s)) return false;
      }
    }
    std::size_t i = len - 3;
    bool advanced = false;
    for (std::size_t step = 0; step + 2 < len; ++step, --i) {
      if (s[i] < eq.hi[i]) {
        ++s[i];
        advanced = true;
        break;
      }
      s[i] = eq.lo[i];
    }
    if (!advanced) break;
  }
  return true;
}

DetOneBox::DetOneBox(int n, std::int64_t q, IntMatrix residues, std::int64_t bound)
    : n_(n), q_(q), bound_(bound), residues_(std::move(residues)) {
  require(n == 2 || n == 3, "only n = 2 and n = 3 are supported");
  require(q >= 1, "level must be positive");
  require(bound >= 0, "norm bound must be non-negative");
  require(residues_.size() == static_cast<std::size_t>(n * n), "residue matrix has the wrong size");
  for (auto& r : residues_) r = exactalg::mod_floor(r, q);
}

bool DetOneBox::scan(Budget& budget, const std::function<bool(const IntMatrix&, const BoxEquation&)>& f) const {
  const int n = n_;
  const std::size_t top = static_cast<std::size_t>((n - 1) * n);
  // Entry k of the first rows runs over residue + q t, |.| <= B.
  std::vector<std::int64_t> lo(top), hi(top);
  for (std::size_t k = 0; k < top; ++k) {
    const i128 r = residues_[k];
    lo[k] = static_cast<std::int64_t>(ceil_div(-bound_ - r, q_) * q_ + r);
    hi[k] = static_cast<std::int64_t>(floor_div(bound_ - r, q_) * q_ + r);
    if (lo[k] > hi[k]) return true;
  }
  IntMatrix g(static_cast<std::size_t>(n * n), 0);
  for (std::size_t k = 0; k < top; ++k) g[k] = lo[k];
  BoxEquation eq;
  eq.v.resize(static_cast<std::size_t>(n));
  eq.lo.resize(static_cast<std::size_t>(n));
  eq.hi.resize(static_cast<std::size_t>(n));
  const std::size_t last = top;
  for (int j = 0; j < n; ++j) {
    const i128 r = residues_[last + static_cast<std::size_t>(j)];
    eq.lo[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(ceil_div(-bound_ - r, q_));
    eq.hi[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(floor_div(bound_ - r, q_));
    if (eq.lo[static_cast<std::size_t>(j)] > eq.hi[static_cast<std::size_t>(j)]) return true;
  }
  while (true) {
    budget.charge();
    // Cofactors of the last row.
    if (n == 2) {
      eq.v[0] = -g[1];
      eq.v[1] = g[0];
    } else {
      eq.v[0] = g[1] * g[5] - g[2] * g[4];
      eq.v[1] = -(g[0] * g[5] - g[2] * g[3]);
      eq.v[2] = g[0] * g[4] - g[1] * g[3];
    }
    // last = residues + q s: q (s . v) = 1 - residues . v.
    i128 base = 1;
    for (int j = 0; j < n; ++j) base -= static_cast<i128>(residues_[last + static_cast<std::size_t>(j)]) * eq.v[static_cast<std::size_t>(j)];
    if (base % q_ == 0) {
      eq.m = static_cast<std::int64_t>(base / q_);
      if (!f(g, eq)) return false;
    }
    std::size_t k = top;
    bool advanced = false;
    while (k-- > 0) {
      if (g[k] < hi[k]) {
        g[k] += q_;
        advanced = true;
        break;
      }
      g[k] = lo[k];
    }
    if (!advanced) break;
  }
  return true;
}

std::uint64_t DetOneBox::count(Budget& budget) const {
  std::uint64_t total = 0;
  scan(budget, [&](const IntMatrix&, const BoxEquation& eq) {
    total += count_box_solutions(eq, budget);
    return true;
  });
  return total;
}

bool DetOneBox::for_each(Budget& budget, const std::function<bool(const IntMatrix&)>& visit) const {
  const std::size_t last = static_cast<std::size_t>((n_ - 1) * n_);
  return scan(budget, [&](const IntMatrix& prefix, const BoxEquation& eq) {
    IntMatrix g = prefix;
    return for_each_box_solution(eq, budget, [&](const std::vector<std::int64_t>& s) {
      for (int j = 0; j < n_; ++j)
        g[last + static_cast<std::size_t>(j)] = residues_[last + static_cast<std::size_t>(j)] + q_ * s[static_cast<std::size_t>(j)];
      return visit(g);
    });
  });
}

}  // namespace gammaq::latcount
