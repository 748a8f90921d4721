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


#ifndef GAMMAQ_FFCHAR_FP_MATRIX_HPP
#define GAMMAQ_FFCHAR_FP_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammaq/errors.hpp"

namespace gammaq::ffchar {

// Partition in non-increasing order.
using Partition = std::vector<int>;

// n x n matrix over F_p, p prime, entries in [0, p), row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int n, int p);
  static FpMatrix identity(int n, int p);
  static FpMatrix from_entries(int n, int p, const std::vector<std::int64_t>& entries);
  // Inverse of key().
  static FpMatrix from_key(int n, int p, std::uint64_t key);

  int n() const { return n_; }
  int p() const { return p_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, std::int64_t v);

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  bool operator==(const FpMatrix& o) const { return n_ == o.n_ && p_ == o.p_ && a_ == o.a_; }
  FpMatrix power(std::uint64_t e) const;
  // Throws PreconditionError when singular.
  FpMatrix inverse() const;
  int det() const;
  int rank() const;
  bool is_invertible() const { return det() != 0; }
  bool is_identity() const;
  bool is_upper_unitriangular() const;
  // (g - 1)^n = 0
  bool is_unipotent() const;
  // Multiplicative order; g must be invertible.
  std::uint64_t order() const;

  // Base-p digits of the entries, row-major, first entry least significant.
  std::uint64_t key() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  int p_ = 2;
  std::vector<int> a_;
};

// Jordan type of a unipotent u from the ranks of (u - 1)^k.
Partition unipotent_jordan_type(const FpMatrix& u);

std::vector<Partition> partitions(int n);
std::string partition_to_string(const Partition& part);
Partition parse_partition(const std::string& text);

// All of GL_n(F_p) in increasing key order.  Needs p^{n^2} <= 2^26.
std::vector<FpMatrix> enumerate_gl(int n, int p, Budget& budget);

}  // namespace gammaq::ffchar

#endif  // GAMMAQ_FFCHAR_FP_MATRIX_HPP
