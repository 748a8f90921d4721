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


#include "gammaq/ffchar/fp_matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::ffchar {

namespace {

int inv_mod(int a, int p) { return static_cast<int>(exactalg::mod_inverse(a, p)); }

// Row reduction in place; returns the rank and accumulates the determinant.
int eliminate(std::vector<int>& a, int n, int p, int& det) {
  det = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(rank * n + j)]);
      det = (p - det) % p;
    }
    const int pv = a[static_cast<std::size_t>(rank * n + col)];
    det = det * pv % p;
    const int iv = inv_mod(pv, p);
    for (int r = rank + 1; r < n; ++r) {
      const int f = a[static_cast<std::size_t>(r * n + col)] * iv % p;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) {
        int& x = a[static_cast<std::size_t>(r * n + j)];
        x = ((x - f * a[static_cast<std::size_t>(rank * n + j)]) % p + p) % p;
      }
    }
    ++rank;
  }
  if (rank < n) det = 0;
  return rank;
}

}  // namespace

FpMatrix::FpMatrix(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {
  require(n >= 1, "dimension must be positive");
  require(p >= 2, "modulus must be at least 2");
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.a_[static_cast<std::size_t>(i * n + i)] = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_entries(int n, int p, const std::vector<std::int64_t>& entries) {
  require(entries.size() == static_cast<std::size_t>(n * n), "wrong number of entries");
  FpMatrix m(n, p);
  for (std::size_t k = 0; k < entries.size(); ++k) m.a_[k] = static_cast<int>(exactalg::mod_floor(entries[k], p));
  return m;
}

FpMatrix FpMatrix::from_key(int n, int p, std::uint64_t key) {
  FpMatrix m(n, p);
  for (auto& x : m.a_) {
    x = static_cast<int>(key % static_cast<std::uint64_t>(p));
    key /= static_cast<std::uint64_t>(p);
  }
  return m;
}

void FpMatrix::set(int i, int j, std::int64_t v) {
  a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<int>(exactalg::mod_floor(v, p_));
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  require(n_ == o.n_ && p_ == o.p_, "matrix shape mismatch");
  FpMatrix r(n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const int x = a_[static_cast<std::size_t>(i * n_ + k)];
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) r.a_[static_cast<std::size_t>(i * n_ + j)] += x * o.a_[static_cast<std::size_t>(k * n_ + j)];
    }
  for (auto& v : r.a_) v %= p_;
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  require(n_ == o.n_ && p_ == o.p_, "matrix shape mismatch");
  FpMatrix r(n_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ((a_[k] - o.a_[k]) % p_ + p_) % p_;
  return r;
}

FpMatrix FpMatrix::power(std::uint64_t e) const {
  FpMatrix r = identity(n_, p_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FpMatrix FpMatrix::inverse() const {
  const int n = n_, p = p_;
  std::vector<int> a = a_;
  FpMatrix inv = identity(n, p);
  std::vector<int>& b = inv.a_;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw PreconditionError("matrix is singular over F_p");
    for (int j = 0; j < n; ++j) {
      std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(col * n + j)]);
      std::swap(b[static_cast<std::size_t>(piv * n + j)], b[static_cast<std::size_t>(col * n + j)]);
    }
    const int iv = inv_mod(a[static_cast<std::size_t>(col * n + col)], p);
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(col * n + j)] = a[static_cast<std::size_t>(col * n + j)] * iv % p;
      b[static_cast<std::size_t>(col * n + j)] = b[static_cast<std::size_t>(col * n + j)] * iv % p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const int f = a[static_cast<std::size_t>(r * n + col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        int& x = a[static_cast<std::size_t>(r * n + j)];
        x = ((x - f * a[static_cast<std::size_t>(col * n + j)]) % p + p) % p;
        int& y = b[static_cast<std::size_t>(r * n + j)];
        y = ((y - f * b[static_cast<std::size_t>(col * n + j)]) % p + p) % p;
      }
    }
  }
  return inv;
}

int FpMatrix::det() const {
  std::vector<int> a = a_;
  int d = 0;
  eliminate(a, n_, p_, d);
  return d;
}

int FpMatrix::rank() const {
  std::vector<int> a = a_;
  int d = 0;
  return eliminate(a, n_, p_, d);
}

bool FpMatrix::is_identity() const { return *this == identity(n_, p_); }

bool FpMatrix::is_upper_unitriangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool FpMatrix::is_unipotent() const {
  const FpMatrix nil = *this - identity(n_, p_);
  return nil.power(static_cast<std::uint64_t>(n_)) == FpMatrix(n_, p_);
}

std::uint64_t FpMatrix::order() const {
  require(is_invertible(), "order of a singular matrix");
  FpMatrix g = *this;
  std::uint64_t k = 1;
  while (!g.is_identity()) {
    g = g * *this;
    ++k;
  }
  return k;
}

std::uint64_t FpMatrix::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = a_.size(); i-- > 0;) k = k * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(a_[i]);
  return k;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  return os.str();
}

Partition unipotent_jordan_type(const FpMatrix& u) {
  require(u.is_unipotent(), "matrix is not unipotent");
  const int n = u.n();
  const FpMatrix nil = u - FpMatrix::identity(n, u.p());
  // ranks[k] = rank of nil^k
  std::vector<int> ranks(static_cast<std::size_t>(n + 2), 0);
  FpMatrix pw = FpMatrix::identity(n, u.p());
  for (int k = 0; k <= n + 1; ++k) {
    ranks[static_cast<std::size_t>(k)] = pw.rank();
    pw = pw * nil;
  }
  // Blocks of size >= k: ranks[k-1] - ranks[k]; of size exactly k: difference.
  Partition part;
  for (int k = n; k >= 1; --k) {
    const int at_least_k = ranks[static_cast<std::size_t>(k - 1)] - ranks[static_cast<std::size_t>(k)];
    const int at_least_k1 = ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)];
    for (int t = 0; t < at_least_k - at_least_k1; ++t) part.push_back(k);
  }
  return part;
}

std::vector<Partition> partitions(int n) {
  require(n >= 1, "n must be positive");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_to_string(const Partition& part) {
  std::string s;
  for (std::size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i]);
  return s;
}

Partition parse_partition(const std::string& text) {
  Partition part;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty(), "empty partition part");
    part.push_back(std::stoi(tok));
    require(part.back() >= 1, "partition parts must be positive");
  }
  require(std::is_sorted(part.rbegin(), part.rend()), "partition parts must be non-increasing");
  return part;
}

std::vector<FpMatrix> enumerate_gl(int n, int p, Budget& budget) {
  require(exactalg::is_prime(p), "p must be prime");
  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) {
    total *= static_cast<std::uint64_t>(p);
    require(total <= (1ULL << 26), "GL_n(F_p) is too large to enumerate");
  }
  std::vector<FpMatrix> out;
  for (std::uint64_t key = 0; key < total; ++key) {
    budget.charge();
    FpMatrix m = FpMatrix::from_key(n, p, key);
    if (m.is_invertible()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace gammaq::ffchar
