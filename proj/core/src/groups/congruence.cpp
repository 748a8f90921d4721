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

#include "gammaq/groups/congruence.hpp"

#include <set>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/exactalg/unipotent.hpp"

namespace gammaq::groups {

using exactalg::floor_of;
using exactalg::in_coset;
using exactalg::pow_integer;
using exactalg::pow_rational;

ExactMatrix dq_matrix(int n, std::int64_t q) {
  require(n >= 1 && q >= 1, "bad D_q parameters");
  std::vector<Rational> d(n);
  for (int i = 0; i < n; ++i) d[i] = pow_rational(Rational(static_cast<long>(q)), n - 1 - i);
  return ExactMatrix::diagonal(d);
}

ExactMatrix conjugate_by_dq(const ExactMatrix& g, std::int64_t q, Direction direction) {
  require(q >= 1, "level must be positive");
  const int n = static_cast<int>(g.size());
  const Rational qr(static_cast<long>(q));
  ExactMatrix out = g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int e = direction == Direction::kToGamma ? j - i : i - j;
      if (e != 0) out(i, j) *= pow_rational(qr, e);
    }
  return out;
}

namespace {

bool in_gamma_q(const ExactMatrix& g, std::int64_t q) {
  if (!g.is_integral() || g.determinant() != 1) return false;
  const Integer qz(static_cast<long>(q));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      Integer v = g(i, j).get_num();
      if (i == j) v -= 1;
      if (v % qz != 0) return false;
    }
  return true;
}

}  // namespace

CellLattice natural_cell(int i, int j, std::int64_t q) {
  return {Rational(i == j ? 1 : 0), pow_rational(Rational(static_cast<long>(q)), 1 + i - j)};
}

bool matches_natural_pattern(const ExactMatrix& g, std::int64_t q) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CellLattice c = natural_cell(i, j, q);
      if (!in_coset(g(i, j), c.offset, c.modulus)) return false;
    }
  return true;
}

bool is_member(const ExactMatrix& g, const CongruenceSpec& spec) {
  require(static_cast<int>(g.size()) == spec.n, "dimension mismatch");
  require(spec.q >= 1, "level must be positive");
  if (spec.flavor == Flavor::kGammaQ) return in_gamma_q(g, spec.q);
  const bool member = in_gamma_q(conjugate_by_dq(g, spec.q, Direction::kToGamma), spec.q);
  const bool pattern = matches_natural_pattern(g, spec.q) && g.determinant() == 1;
  if (member != pattern) throw IntegrityError("natural-group membership disagrees with entry pattern");
  return member;
}

Integer index_sl(int n, std::int64_t q) {
  require(n >= 1 && q >= 1, "bad index parameters");
  Integer v = pow_integer(Integer(static_cast<long>(q)), static_cast<unsigned long>(n * n - 1));
  for (std::int64_t p : exactalg::prime_divisors(q)) {
    for (int k = 2; k <= n; ++k) {
      const Integer pk = pow_integer(Integer(static_cast<long>(p)), k);
      v = v / pk * (pk - 1);
    }
  }
  return v;
}

Integer unipotent_index(int n, std::int64_t q) {
  require(n >= 1 && q >= 1, "bad index parameters");
  return pow_integer(Integer(static_cast<long>(q)), static_cast<unsigned long>(n * (n - 1) * (n - 2) / 6));
}

namespace {

// Determinant of an integer matrix given row-major, by cofactor expansion.
std::int64_t det_int(const std::vector<std::int64_t>& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  std::int64_t d = 0;
  std::vector<std::int64_t> sub((n - 1) * (n - 1));
  for (int c = 0; c < n; ++c) {
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int j = 0; j < n; ++j)
        if (j != c) sub[(i - 1) * (n - 1) + cc++] = a[i * n + j];
    }
    const std::int64_t t = a[c] * det_int(sub, n - 1);
    d += (c % 2 == 0) ? t : -t;
  }
  return d;
}

}  // namespace

Integer count_sl_mod_q(int n, std::int64_t q) {
  require(n >= 1 && n <= 4 && q >= 1, "exhaustive count supports n <= 4");
  const int cells = n * n;
  std::vector<std::int64_t> a(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    if (exactalg::mod_floor(det_int(a, n), q) == 1 % q) ++count;
    int k = 0;
    while (k < cells && ++a[k] == q) a[k++] = 0;
    if (k == cells) break;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer count_unipotent_cosets(int n, std::int64_t q) {
  // Keep the members of a grid in [0,1) and count distinct left normal forms.
  require(n >= 1 && q >= 1, "bad parameters");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  // Entry (i,j) needs denominator q^{j-i-1}.  When affordable, allow one more
  // power of q so that the count also tests that finer entries are rejected.
  std::vector<std::int64_t> den(cells.size()), idx(cells.size(), 0);
  std::uint64_t total = 1;
  for (int extra = 1; extra >= 0; --extra) {
    total = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const int e = cells[k].second - cells[k].first - 1 + extra;
      den[k] = exactalg::ipow(q, static_cast<unsigned>(e));
      total *= static_cast<std::uint64_t>(den[k]);
    }
    if (total <= 200'000ULL) break;
  }
  require(total <= 5'000'000ULL, "unipotent coset count too large");
  const CongruenceSpec spec{n, q, Flavor::kGammaQNatural};
  std::set<std::string> seen;
  while (true) {
    ExactMatrix x = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < cells.size(); ++k)
      x(cells[k].first, cells[k].second) = exactalg::make_rational(idx[k], den[k]);
    if (is_member(x, spec)) seen.insert(exactalg::normal_form_left(x).reduced.to_string());
    std::size_t k = 0;
    while (k < cells.size() && ++idx[k] == den[k]) idx[k++] = 0;
    if (k == cells.size()) break;
  }
  return Integer(static_cast<unsigned long>(seen.size()));
}

}  // namespace gammaq::groups
