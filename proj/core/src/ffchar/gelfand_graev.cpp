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


#include "gammaq/ffchar/gelfand_graev.hpp"

#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::ffchar {

std::int64_t UnipotentClassFunction::dim() const {
  const auto it = values.find(Partition(static_cast<std::size_t>(n), 1));
  require(it != values.end(), "class function lacks the identity type");
  return it->second;
}

GGReport gg_sum(const UnipotentClassFunction& chi, Budget& budget, const std::vector<std::int64_t>& twist) {
  const int n = chi.n, p = chi.p;
  require(n >= 2, "n must be at least 2");
  require(exactalg::is_prime(p), "p must be prime");
  for (const auto& part : partitions(n)) require(chi.values.count(part) == 1, "class function must cover every partition");
  GGReport r;
  r.n = n;
  r.p = p;
  r.character = chi;
  r.twist = twist.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1) : twist;
  require(r.twist.size() == static_cast<std::size_t>(n - 1), "twist needs n-1 coefficients");
  for (auto a : r.twist) require(exactalg::mod_floor(a, p) != 0, "twist must be non-degenerate");

  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) free.emplace_back(i, j);
  std::vector<int> digits(free.size(), 0);
  while (true) {
    budget.charge();
    FpMatrix u = FpMatrix::identity(n, p);
    std::int64_t lin = 0;
    for (std::size_t f = 0; f < free.size(); ++f) {
      u.set(free[f].first, free[f].second, digits[f]);
      if (free[f].second == free[f].first + 1) lin += r.twist[static_cast<std::size_t>(free[f].first)] * digits[f];
    }
    const std::int64_t mult = chi.values.at(unipotent_jordan_type(u));
    if (mult != 0) r.raw.add(exactalg::make_rational(-lin, p), mult);
    std::size_t f = 0;
    for (; f < digits.size(); ++f) {
      if (++digits[f] < p) break;
      digits[f] = 0;
    }
    if (f == digits.size()) break;
  }
  const Integer scale = exactalg::pow_integer(Integer(p), static_cast<unsigned long>(n * (n - 1) / 2));
  if (const auto v = r.raw.integer_value()) {
    r.rational = true;
    r.sum_value = Rational(*v, scale);
    r.sum_value.canonicalize();
    r.real_approx = r.sum_value.get_d();
  } else {
    const auto val = r.raw.evaluate(15);
    r.real_approx = val.real_approx / scale.get_d();
    r.imag_approx = val.imag_approx / scale.get_d();
  }
  return r;
}

Integer cuspidal_dim(int n, int p) {
  require(n >= 1 && p >= 2, "invalid dimension parameters");
  Integer d = 1;
  for (int i = 1; i <= n - 1; ++i) d *= exactalg::pow_integer(Integer(p), static_cast<unsigned long>(i)) - 1;
  return d;
}

UnipotentClassFunction unipotent_restriction(const CharacterTable& table, std::size_t a) {
  require(a < table.size(), "character index out of range");
  UnipotentClassFunction f;
  f.n = table.n;
  f.p = table.p;
  for (std::size_t k = 0; k < table.classes.size(); ++k) {
    const auto& cl = table.classes[k];
    if (!cl.unipotent_type) continue;
    const auto v = table.values[a][k].as_integer();
    if (!v) throw IntegrityError("unipotent character value is not a rational integer");
    const auto [it, fresh] = f.values.emplace(*cl.unipotent_type, exactalg::to_int64(*v));
    if (!fresh) throw IntegrityError("two unipotent classes share a Jordan type");
  }
  return f;
}

UnipotentClassFunction cuspidal_unipotent_formula(int n, int p) {
  require(n == 2 || n == 3, "explicit values are implemented for n = 2 and n = 3");
  UnipotentClassFunction f;
  f.n = n;
  f.p = p;
  if (n == 2) {
    f.values[{1, 1}] = p - 1;
    f.values[{2}] = -1;
  } else {
    f.values[{1, 1, 1}] = static_cast<std::int64_t>(p - 1) * (static_cast<std::int64_t>(p) * p - 1);
    f.values[{2, 1}] = -(p - 1);
    f.values[{3}] = 1;
  }
  return f;
}

UnipotentClassFunction cuspidal_unipotent_char(const CharacterTable& table) {
  const UnipotentClassFunction expect = cuspidal_unipotent_formula(table.n, table.p);
  std::size_t seen = 0;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!table.cuspidal[a]) continue;
    ++seen;
    if (unipotent_restriction(table, a).values != expect.values)
      throw IntegrityError("cuspidal character disagrees with the unipotent value formula");
  }
  if (seen == 0) throw IntegrityError("character table has no cuspidal characters");
  return expect;
}

UnipotentClassFunction cuspidal_unipotent_char(int n, int p, Budget& budget) {
  return cuspidal_unipotent_char(character_table_oracle(n, p, budget));
}

}  // namespace gammaq::ffchar
