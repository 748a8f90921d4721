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

#include "gammaq/exactalg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::exactalg {
namespace {

// Exact division of a by a monic divisor b.
std::vector<Integer> divide_monic(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> rem = a;
  const std::size_t db = b.size() - 1;
  std::vector<Integer> quot(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer coef = rem[k];
    quot[k - db] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= coef * b[j];
  }
  return quot;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  require(m >= 1, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  // Divisors of d are divisors of m below d, so ascending order suffices.
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    std::vector<Integer> q(d + 1);
    q[0] = -1;
    q[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) q = divide_monic(q, cache.at(e));
    cache.emplace(d, std::move(q));
  }
  return cache.at(m);
}

std::vector<Integer> reduce_mod_cyclotomic(const std::vector<Integer>& poly, int m) {
  std::vector<Integer> folded(m);
  for (std::size_t k = 0; k < poly.size(); ++k) folded[k % m] += poly[k];
  const std::vector<Integer>& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = folded.size(); k-- > deg;) {
    const Integer coef = folded[k];
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) folded[k - deg + j] -= coef * phi[j];
  }
  folded.resize(deg);
  return folded;
}

CyclotomicInteger::CyclotomicInteger(int order) : m_(order), c_(order, 0) {
  require(order >= 1, "cyclotomic order must be positive");
}

CyclotomicInteger CyclotomicInteger::from_integer(int order, std::int64_t value) {
  CyclotomicInteger z(order);
  z.c_[0] = value;
  return z;
}

void CyclotomicInteger::add_root(int k, std::int64_t mult) {
  const int r = static_cast<int>(mod_floor(k, m_));
  c_[r] = checked_add(c_[r], mult);
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  require(m_ == o.m_, "cyclotomic order mismatch");
  CyclotomicInteger r = *this;
  for (int k = 0; k < m_; ++k) r.c_[k] = checked_add(r.c_[k], o.c_[k]);
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  return *this + o * -1;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  require(m_ == o.m_, "cyclotomic order mismatch");
  CyclotomicInteger r(m_);
  for (int i = 0; i < m_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      if (o.c_[j] == 0) continue;
      const int k = (i + j) % m_;
      r.c_[k] = checked_add(r.c_[k], checked_mul(c_[i], o.c_[j]));
    }
  }
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(std::int64_t s) const {
  CyclotomicInteger r = *this;
  for (auto& v : r.c_) v = checked_mul(v, s);
  return r;
}

CyclotomicInteger CyclotomicInteger::conjugate() const { return galois(-1); }

CyclotomicInteger CyclotomicInteger::galois(int k) const {
  CyclotomicInteger r(m_);
  for (int i = 0; i < m_; ++i)
    if (c_[i] != 0) r.add_root(static_cast<int>(mod_floor(static_cast<std::int64_t>(i) * k, m_)), c_[i]);
  return r;
}

bool CyclotomicInteger::is_zero() const {
  std::vector<Integer> p(m_);
  for (int k = 0; k < m_; ++k) p[k] = Integer(static_cast<long>(c_[k]));
  for (const auto& v : reduce_mod_cyclotomic(p, m_))
    if (v != 0) return false;
  return true;
}

std::optional<Integer> CyclotomicInteger::as_integer() const {
  std::vector<Integer> p(m_);
  for (int k = 0; k < m_; ++k) p[k] = Integer(static_cast<long>(c_[k]));
  const auto red = reduce_mod_cyclotomic(p, m_);
  for (std::size_t k = 1; k < red.size(); ++k)
    if (red[k] != 0) return std::nullopt;
  return red.empty() ? Integer(0) : red[0];
}

std::complex<double> CyclotomicInteger::to_complex() const {
  std::complex<double> s = 0;
  for (int k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    const double a = 2.0 * std::numbers::pi * k / m_;
    s += static_cast<double>(c_[k]) * std::complex<double>(std::cos(a), std::sin(a));
  }
  return s;
}

std::string CyclotomicInteger::to_string() const {
  if (auto z = as_integer()) return z->get_str();
  std::string s;
  for (int k = 0; k < m_; ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(c_[k]) + "*z" + std::to_string(m_) + "^" + std::to_string(k);
  }
  return s;
}

}  // namespace gammaq::exactalg
