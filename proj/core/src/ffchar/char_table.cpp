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


#include "gammaq/ffchar/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::ffchar {

namespace {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

i64 md(i64 a, i64 m) { return exactalg::mod_floor(a, m); }
i64 mulm(i64 a, i64 b, i64 m) { return exactalg::mul_mod(a, b, m); }
i64 invm(i64 a, i64 m) { return exactalg::mod_inverse(a, m); }

// Row-reduces the given vectors in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, i64 P) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
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
    const i64 iv = invm(rows[r][c], P);
    for (auto& x : rows[r]) x = mulm(x, iv, P);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const i64 f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = md(rows[i][j] - mulm(f, rows[r][j], P), P);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {u : A u = 0}.
Mat kernel(Mat a, i64 P) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a, P);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec u(cols, 0);
    u[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = md(-a[r][f], P);
    basis.push_back(std::move(u));
  }
  return basis;
}

// Monic characteristic polynomial, lowest degree first, via Hessenberg form.
Vec char_poly(Mat h, i64 P) {
  const std::size_t d = h.size();
  for (std::size_t k = 0; k + 2 < d + 0 && k + 1 < d; ++k) {
    std::size_t piv = d;
    for (std::size_t r = k + 1; r < d; ++r)
      if (h[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv == d) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (std::size_t r = 0; r < d; ++r) std::swap(h[r][piv], h[r][k + 1]);
    }
    const i64 iv = invm(h[k + 1][k], P);
    for (std::size_t i = k + 2; i < d; ++i) {
      const i64 f = mulm(h[i][k], iv, P);
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) h[i][j] = md(h[i][j] - mulm(f, h[k + 1][j], P), P);
      for (std::size_t r = 0; r < d; ++r) h[r][k + 1] = md(h[r][k + 1] + mulm(f, h[r][i], P), P);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} prod_{j=i+1}^{k} h_{j,j-1} p_{i-1}
  std::vector<Vec> polys(d + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= d; ++k) {
    Vec pk(k + 1, 0);
    const Vec& prev = polys[k - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      pk[t + 1] = md(pk[t + 1] + prev[t], P);
      pk[t] = md(pk[t] - mulm(h[k - 1][k - 1], prev[t], P), P);
    }
    i64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mulm(prod, h[i + 1][i], P);
      const i64 f = mulm(h[i][k - 1], prod, P);
      if (f == 0) continue;
      const Vec& pi = polys[i];
      for (std::size_t t = 0; t < pi.size(); ++t) pk[t] = md(pk[t] - mulm(f, pi[t], P), P);
    }
    polys[k] = std::move(pk);
  }
  return polys[d];
}

std::vector<i64> roots(const Vec& poly, i64 P, Budget& budget) {
  std::vector<i64> out;
  for (i64 x = 0; x < P; ++x) {
    if ((x & 1023) == 0) budget.charge(1024);
    i64 v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = md(mulm(v, x, P) + poly[k], P);
    if (v == 0) out.push_back(x);
  }
  return out;
}

i64 primitive_root_of_unity(int e, i64 P) {
  const auto primes = exactalg::prime_divisors(e);
  for (i64 x = 2; x < P; ++x) {
    const i64 t = exactalg::pow_mod(x, static_cast<std::uint64_t>((P - 1) / e), P);
    bool ok = true;
    for (auto l : primes)
      if (exactalg::pow_mod(t, static_cast<std::uint64_t>(e / l), P) == 1) ok = false;
    if (ok && (e > 1 || t == 1)) return t;
  }
  throw IntegrityError("no primitive root of unity modulo the Dixon prime");
}

// Compositions of n with at least two parts.
std::vector<std::vector<int>> proper_compositions(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (mask == 0) continue;
    std::vector<int> parts;
    int len = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1u << b)) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.push_back(parts);
  }
  return out;
}

}  // namespace

CharacterTable character_table_oracle(int n, int p, Budget& budget) {
  require(n >= 1, "n must be positive");
  require(exactalg::is_prime(p), "p must be prime");
  CharacterTable t;
  t.n = n;
  t.p = p;
  const std::vector<FpMatrix> elems = enumerate_gl(n, p, budget);
  const std::size_t G = elems.size();
  require(G <= 100000, "group too large for the character table oracle");
  t.group_order = G;

  std::uint64_t keyspace = 1;
  for (int k = 0; k < n * n; ++k) keyspace *= static_cast<std::uint64_t>(p);
  std::vector<std::int32_t> index_of(keyspace, -1);
  for (std::size_t i = 0; i < G; ++i) index_of[elems[i].key()] = static_cast<std::int32_t>(i);
  auto idx = [&](const FpMatrix& m) { return static_cast<std::size_t>(index_of[m.key()]); };
  std::vector<std::size_t> inv(G);
  for (std::size_t i = 0; i < G; ++i) inv[i] = idx(elems[i].inverse());

  // Generators: elementary transvections and a diagonal generator.
  std::vector<FpMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    FpMatrix a = FpMatrix::identity(n, p), b = FpMatrix::identity(n, p);
    a.set(i, i + 1, 1);
    b.set(i + 1, i, 1);
    gens.push_back(a);
    gens.push_back(b);
  }
  {
    int g = 1;
    for (int x = 1; x < p; ++x) {
      int o = 1, y = x;
      while (y != 1) {
        y = y * x % p;
        ++o;
      }
      if (o == p - 1) {
        g = x;
        break;
      }
    }
    FpMatrix d = FpMatrix::identity(n, p);
    d.set(0, 0, g);
    gens.push_back(d);
  }
  std::vector<FpMatrix> gens_inv;
  for (auto& g : gens) gens_inv.push_back(g.inverse());

  // Conjugacy classes.
  std::vector<int> class_of(G, -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < G; ++i) {
    if (class_of[i] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::deque<std::size_t> queue{i};
    class_of[i] = c;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      members[static_cast<std::size_t>(c)].push_back(x);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        budget.charge();
        const std::size_t y = idx(gens[s] * elems[x] * gens_inv[s]);
        if (class_of[y] < 0) {
          class_of[y] = c;
          queue.push_back(y);
        }
      }
    }
  }
  const std::size_t r = members.size();
  t.classes.resize(r);
  std::uint64_t exponent = 1;
  for (std::size_t c = 0; c < r; ++c) {
    auto& cl = t.classes[c];
    cl.representative = elems[members[c].front()];
    cl.size = members[c].size();
    cl.element_order = cl.representative.order();
    cl.inverse_class = class_of[inv[members[c].front()]];
    if (cl.representative.is_unipotent()) cl.unipotent_type = unipotent_jordan_type(cl.representative);
    if (cl.representative.is_identity()) t.identity_class = static_cast<int>(c);
    exponent = std::lcm(exponent, cl.element_order);
  }
  t.exponent = static_cast<int>(exponent);
  const int e = t.exponent;

  // Dixon prime.
  i64 P = static_cast<i64>(2 * G / static_cast<std::uint64_t>(e) + 1) * e + 1;
  while (!exactalg::is_prime(P)) P += e;
  t.dixon_prime = P;

  // Class constants c[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}.
  std::vector<std::vector<std::vector<i64>>> cc(r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (auto x : members[i])
      for (std::size_t k = 0; k < r; ++k) {
        budget.charge();
        const std::size_t y = idx(elems[inv[x]] * elems[members[k].front()]);
        ++cc[i][static_cast<std::size_t>(class_of[y])][k];
      }

  // Simultaneous eigenspaces of A_i, (A_i)_{jk} = c_{ijk}.
  auto apply = [&](std::size_t i, const Vec& v) {
    Vec out(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      i64 s = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (cc[i][j][k] != 0) s = md(s + mulm(cc[i][j][k] % P, v[k], P), P);
      out[j] = s;
    }
    return out;
  };
  std::vector<Mat> spaces;
  {
    Mat full;
    for (std::size_t k = 0; k < r; ++k) {
      Vec u(r, 0);
      u[k] = 1;
      full.push_back(u);
    }
    spaces.push_back(full);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const auto pivots = rref(basis, P);
      const std::size_t d = basis.size();
      Mat R(d, Vec(d, 0));
      for (std::size_t l = 0; l < d; ++l) {
        const Vec img = apply(i, basis[l]);
        for (std::size_t m = 0; m < d; ++m) R[m][l] = img[pivots[m]];
      }
      const Vec cp = char_poly(R, P);
      std::size_t found = 0;
      for (i64 lam : roots(cp, P, budget)) {
        Mat shifted = R;
        for (std::size_t m = 0; m < d; ++m) shifted[m][m] = md(shifted[m][m] - lam, P);
        Mat sub;
        for (const Vec& u : kernel(shifted, P)) {
          Vec v(r, 0);
          for (std::size_t l = 0; l < d; ++l)
            if (u[l] != 0)
              for (std::size_t k = 0; k < r; ++k) v[k] = md(v[k] + mulm(u[l], basis[l][k], P), P);
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw IntegrityError("class algebra did not split over the Dixon prime");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw IntegrityError("common eigenspaces are not one-dimensional");

  const i64 z = primitive_root_of_unity(e, P);
  const auto id = static_cast<std::size_t>(t.identity_class);
  struct Row {
    std::int64_t degree;
    std::vector<CyclotomicInteger> values;
    std::string sort_key;
  };
  std::vector<Row> rows;
  for (auto& sp : spaces) {
    Vec w = sp[0];
    require(w[id] != 0, "eigenvector vanishes at the identity class");
    const i64 s0 = invm(w[id], P);
    for (auto& x : w) x = mulm(x, s0, P);
    for (std::size_t i = 0; i < r; ++i) {
      const Vec img = apply(i, w);
      for (std::size_t j = 0; j < r; ++j)
        if (img[j] != mulm(w[i], w[j], P)) throw IntegrityError("central character check failed");
    }
    i64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const auto kk = static_cast<std::size_t>(t.classes[k].inverse_class);
      s = md(s + mulm(mulm(w[k], w[kk], P), invm(static_cast<i64>(t.classes[k].size % static_cast<std::uint64_t>(P)), P), P), P);
    }
    const i64 d2 = mulm(static_cast<i64>(G % static_cast<std::uint64_t>(P)), invm(s, P), P);
    i64 degree = 0;
    for (i64 d = 1; d * d <= static_cast<i64>(G); ++d)
      if (mulm(d, d, P) == d2) {
        if (degree != 0) throw IntegrityError("degree is not determined");
        degree = d;
      }
    if (degree == 0) throw IntegrityError("no degree matches the central character");
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = mulm(mulm(degree, w[k], P), invm(static_cast<i64>(t.classes[k].size % static_cast<std::uint64_t>(P)), P), P);
    Row row;
    row.degree = degree;
    for (std::size_t k = 0; k < r; ++k) {
      const auto& cl = t.classes[k];
      const auto o = static_cast<i64>(cl.element_order);
      std::vector<std::size_t> pw(static_cast<std::size_t>(o));
      std::size_t h = static_cast<std::size_t>(index_of[FpMatrix::identity(n, p).key()]);
      const std::size_t g = members[k].front();
      for (i64 j = 0; j < o; ++j) {
        pw[static_cast<std::size_t>(j)] = static_cast<std::size_t>(class_of[h]);
        h = idx(elems[h] * elems[g]);
      }
      const i64 zo = exactalg::pow_mod(z, static_cast<std::uint64_t>(e / o), P);
      const i64 zo_inv = invm(zo, P);
      const i64 o_inv = invm(o % P, P);
      CyclotomicInteger val(e);
      i64 total = 0;
      for (i64 l = 0; l < o; ++l) {
        const i64 step = exactalg::pow_mod(zo_inv, static_cast<std::uint64_t>(l), P);
        i64 acc = 0, rootpow = 1;
        for (i64 j = 0; j < o; ++j) {
          acc = md(acc + mulm(chi[pw[static_cast<std::size_t>(j)]], rootpow, P), P);
          rootpow = mulm(rootpow, step, P);
        }
        const i64 mult = mulm(acc, o_inv, P);
        if (mult > degree) throw IntegrityError("eigenvalue multiplicity out of range");
        total += mult;
        if (mult != 0) val.add_root(static_cast<int>(l * (e / o)), mult);
      }
      if (total != degree) throw IntegrityError("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(std::move(val));
    }
    for (auto& v : row.values) row.sort_key += v.to_string() + "|";
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.sort_key < b.sort_key;
  });
  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }

  // Orthogonality, exactly.
  const auto Gi = static_cast<std::int64_t>(G);
  t.first_orthogonality = true;
  for (std::size_t a = 0; a < r && t.first_orthogonality; ++a)
    for (std::size_t b = a; b < r; ++b) {
      CyclotomicInteger s(e);
      for (std::size_t k = 0; k < r; ++k)
        s = s + t.values[a][k] * t.values[b][k].conjugate() * static_cast<std::int64_t>(t.classes[k].size);
      if (!(s == CyclotomicInteger::from_integer(e, a == b ? Gi : 0))) {
        t.first_orthogonality = false;
        break;
      }
    }
  t.second_orthogonality = true;
  for (std::size_t k = 0; k < r && t.second_orthogonality; ++k)
    for (std::size_t l = k; l < r; ++l) {
      CyclotomicInteger s(e);
      for (std::size_t a = 0; a < r; ++a) s = s + t.values[a][k] * t.values[a][l].conjugate();
      const std::int64_t expect = k == l ? Gi / static_cast<std::int64_t>(t.classes[k].size) : 0;
      if (!(s == CyclotomicInteger::from_integer(e, expect))) {
        t.second_orthogonality = false;
        break;
      }
    }

  // Cuspidality: <Res_N chi, 1> = 0 for every proper standard parabolic.
  std::vector<std::vector<std::int64_t>> radical_hist;
  for (const auto& parts : proper_compositions(n)) {
    std::vector<int> block(static_cast<std::size_t>(n));
    int pos = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int k = 0; k < parts[b]; ++k) block[static_cast<std::size_t>(pos++)] = static_cast<int>(b);
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (block[static_cast<std::size_t>(i)] < block[static_cast<std::size_t>(j)]) free.emplace_back(i, j);
    std::vector<std::int64_t> hist(r, 0);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      budget.charge();
      FpMatrix u = FpMatrix::identity(n, p);
      for (std::size_t f = 0; f < free.size(); ++f) u.set(free[f].first, free[f].second, digits[f]);
      ++hist[static_cast<std::size_t>(class_of[idx(u)])];
      std::size_t f = 0;
      for (; f < digits.size(); ++f) {
        if (++digits[f] < p) break;
        digits[f] = 0;
      }
      if (f == digits.size()) break;
    }
    radical_hist.push_back(std::move(hist));
  }
  for (std::size_t a = 0; a < r; ++a) {
    bool cusp = true;
    for (const auto& hist : radical_hist) {
      CyclotomicInteger s(e);
      for (std::size_t k = 0; k < r; ++k)
        if (hist[k] != 0) s = s + t.values[a][k] * hist[k];
      if (!s.is_zero()) {
        cusp = false;
        break;
      }
    }
    t.cuspidal.push_back(cusp);
  }
  return t;
}

}  // namespace gammaq::ffchar
