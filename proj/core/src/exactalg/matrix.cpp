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

#include "gammaq/exactalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "gammaq/errors.hpp"

namespace gammaq::exactalg {

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    require(row.size() == n_, "matrix literal must be square");
    for (const auto& v : row) a_.push_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
  ExactMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::parse(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) r.push_back(parse_rational(entry));
    rows.push_back(std::move(r));
  }
  ExactMatrix m(rows.size());
  require(!rows.empty(), "empty matrix literal");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == rows.size(), "matrix literal must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  require(n_ == rhs.n_, "dimension mismatch in product");
  ExactMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += aik * rhs(k, j);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator*(const Rational& s) const {
  ExactMatrix out = *this;
  for (auto& v : out.a_) v *= s;
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  require(n_ == rhs.n_, "dimension mismatch in sum");
  ExactMatrix out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += rhs.a_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  require(n_ == rhs.n_, "dimension mismatch in difference");
  ExactMatrix out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= rhs.a_[k];
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return n_ == rhs.n_ && a_ == rhs.a_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational ExactMatrix::determinant() const {
  std::vector<std::size_t> idx(n_);
  for (std::size_t i = 0; i < n_; ++i) idx[i] = i;
  return minor(idx, idx);
}

Rational ExactMatrix::minor(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const {
  require(rows.size() == cols.size(), "minor needs as many rows as columns");
  const std::size_t k = rows.size();
  std::vector<Rational> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = (*this)(rows[i], cols[j]);
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv * k + c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m[piv * k + j], m[c * k + j]);
      det = -det;
    }
    const Rational p = m[c * k + c];
    det *= p;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m[r * k + c] == 0) continue;
      const Rational f = m[r * k + c] / p;
      for (std::size_t j = c; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a(piv, c) == 0) ++piv;
    if (piv == n_) throw PreconditionError("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Rational p = a(c, c);
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool ExactMatrix::is_integral() const {
  for (const auto& v : a_)
    if (v.get_den() != 1) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool ExactMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

std::string ExactMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += (*this)(i, j).get_str();
    }
  }
  return s;
}

}  // namespace gammaq::exactalg
