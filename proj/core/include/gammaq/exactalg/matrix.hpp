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

#ifndef GAMMAQ_EXACTALG_MATRIX_HPP
#define GAMMAQ_EXACTALG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gammaq/exactalg/rational.hpp"

namespace gammaq::exactalg {

// Square matrix of exact rationals, stored row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n);
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<Rational>& d);
  // Rows separated by ';', entries by ','; entries may be "a/b".
  static ExactMatrix parse(const std::string& text);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator*(const Rational& s) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

  ExactMatrix transpose() const;
  Rational determinant() const;
  // Throws PreconditionError when singular.
  ExactMatrix inverse() const;
  // Determinant of the submatrix on the given rows and columns.
  Rational minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_integral() const;
  bool is_diagonal() const;
  bool is_upper_unitriangular() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace gammaq::exactalg

#endif  // GAMMAQ_EXACTALG_MATRIX_HPP
