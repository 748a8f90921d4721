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


#ifndef GAMMAQ_FFCHAR_CHAR_TABLE_HPP
#define GAMMAQ_FFCHAR_CHAR_TABLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gammaq/exactalg/cyclotomic.hpp"
#include "gammaq/ffchar/fp_matrix.hpp"

namespace gammaq::ffchar {

using exactalg::CyclotomicInteger;

struct ConjugacyClass {
  FpMatrix representative;  // least key in the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  int inverse_class = 0;
  std::optional<Partition> unipotent_type;
};

// Irreducible characters of GL_n(F_p), values in Z[zeta_e], e the exponent.
struct CharacterTable {
  int n = 2;
  int p = 2;
  std::uint64_t group_order = 0;
  int exponent = 1;
  std::int64_t dixon_prime = 0;
  int identity_class = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<CyclotomicInteger>> values;  // [character][class]
  std::vector<std::int64_t> degrees;
  // No vectors fixed by the unipotent radical of any proper standard parabolic.
  std::vector<bool> cuspidal;
  bool first_orthogonality = false;
  bool second_orthogonality = false;

  std::size_t size() const { return values.size(); }
};

// Classes by conjugation orbits under a generating set; characters by the
// Burnside-Dixon method: common eigenvectors of the class-sum matrices over
// F_P with P = 1 mod e, P > 2|G|, lifted to Z[zeta_e] through eigenvalue
// multiplicities.  Orthogonality is then checked exactly.  Needs
// |GL_n(F_p)| <= 10^5.
CharacterTable character_table_oracle(int n, int p, Budget& budget);

}  // namespace gammaq::ffchar

#endif  // GAMMAQ_FFCHAR_CHAR_TABLE_HPP
