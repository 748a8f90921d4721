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


#include "gammaq/ffchar/parabolic.hpp"

#include <numeric>
#include <set>

#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/ffchar/fp_matrix.hpp"

namespace gammaq::ffchar {

namespace {

void check_parts(int n, const std::vector<int>& parts) {
  require(!parts.empty(), "partition must be non-empty");
  for (int k : parts) require(k >= 1, "parts must be positive");
  require(std::accumulate(parts.begin(), parts.end(), 0) == n, "parts must sum to n");
}

// Row-reduced echelon form of the given rows over F_p, flattened.
std::vector<int> row_space_key(std::vector<std::vector<int>> rows, int p) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const int iv = static_cast<int>(exactalg::mod_inverse(rows[r][c], p));
    for (auto& x : rows[r]) x = x * iv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    ++r;
  }
  std::vector<int> key;
  for (auto& row : rows) key.insert(key.end(), row.begin(), row.end());
  return key;
}

}  // namespace

Integer gl_order(int n, int p) {
  require(n >= 1 && p >= 2, "invalid group parameters");
  const Integer P(p);
  const Integer pn = exactalg::pow_integer(P, static_cast<unsigned long>(n));
  Integer order = 1;
  for (int i = 0; i < n; ++i) order *= pn - exactalg::pow_integer(P, static_cast<unsigned long>(i));
  return order;
}

Integer flag_count(int n, const std::vector<int>& parts, int p) {
  check_parts(n, parts);
  // |P| = prod |GL_{n_i}| * p^{sum_{i<j} n_i n_j}
  Integer levi = 1;
  int cross = 0, seen = 0;
  for (int k : parts) {
    levi *= gl_order(k, p);
    cross += seen * k;
    seen += k;
  }
  const Integer parabolic = levi * exactalg::pow_integer(Integer(p), static_cast<unsigned long>(cross));
  const Integer g = gl_order(n, p);
  if (g % parabolic != 0) throw IntegrityError("parabolic order does not divide the group order");
  return g / parabolic;
}

Integer parabolic_dim_count(int n, const std::vector<int>& parts, int p, const std::vector<std::int64_t>& dims) {
  require(dims.size() == parts.size(), "one dimension per block is needed");
  Integer r = flag_count(n, parts, p);
  for (auto d : dims) {
    require(d >= 1, "dimensions must be positive");
    r *= Integer(static_cast<long>(d));
  }
  return r;
}

Integer flag_count_by_orbits(int n, const std::vector<int>& parts, int p, Budget& budget) {
  check_parts(n, parts);
  // Left multiplication by block upper triangular matrices preserves exactly
  // the spans of the row blocks from block b to the last.
  std::set<std::vector<int>> orbits;
  for (const FpMatrix& g : enumerate_gl(n, p, budget)) {
    budget.charge();
    std::vector<int> key;
    int start = 0;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (b > 0) {
        std::vector<std::vector<int>> rows;
        for (int i = start; i < n; ++i) {
          std::vector<int> row(static_cast<std::size_t>(n));
          for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = g(i, j);
          rows.push_back(std::move(row));
        }
        const auto k = row_space_key(std::move(rows), p);
        key.insert(key.end(), k.begin(), k.end());
        key.push_back(-1);
      }
      start += parts[b];
    }
    orbits.insert(std::move(key));
  }
  return Integer(static_cast<unsigned long>(orbits.size()));
}

PowerDisplay power_display(int n, const std::vector<int>& parts, int p) {
  check_parts(n, parts);
  int cross = 0, seen = 0;
  for (int k : parts) {
    cross += seen * k;
    seen += k;
  }
  PowerDisplay d;
  d.power = exactalg::pow_integer(Integer(p), static_cast<unsigned long>(cross));
  d.ratio = Rational(flag_count(n, parts, p), d.power);
  d.ratio.canonicalize();
  return d;
}

}  // namespace gammaq::ffchar
