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

#include "gammaq/kloosterman/kloosterman_set.hpp"

#include <algorithm>

#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {

std::string method_name(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kEchelon: return "echelon";
    case Method::kWstarLattice: return "wstar_lattice";
    case Method::kGridOracle: return "grid_oracle";
    case Method::kClassicalN2: return "classical_n2";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::kAuto, Method::kEchelon, Method::kWstarLattice, Method::kGridOracle,
                   Method::kClassicalN2})
    if (method_name(m) == name) return m;
  if (name == "wstar") return Method::kWstarLattice;
  if (name == "grid") return Method::kGridOracle;
  if (name == "classical") return Method::kClassicalN2;
  throw PreconditionError("unknown backend: " + name);
}

Method choose_method(const KloostermanQuery& query) {
  if (query.n == 2 && query.w.permutation() == std::vector<int>{1, 0}) return Method::kClassicalN2;
  return Method::kEchelon;
}

bool enumerate(const KloostermanQuery& query, const SetOptions& options, Budget& budget,
               const RepVisitor& visit) {
  const Method m = options.method == Method::kAuto ? choose_method(query) : options.method;
  switch (m) {
    case Method::kEchelon:
      enumerate_echelon(query, budget, visit);
      return true;
    case Method::kClassicalN2:
      enumerate_classical_n2(query, budget, visit);
      return true;
    case Method::kWstarLattice: {
      const auto P = wstar_params_of(query);
      require(P.has_value(), "w_* lattice backend needs w_*, prime q and c of the lemma's shape");
      enumerate_wstar_lattice(*P, budget, visit);
      return true;
    }
    case Method::kGridOracle: {
      const auto cert = certified_height(query);
      std::int64_t h = options.height;
      if (h == 0) {
        require(cert.has_value(), "grid oracle needs an explicit height for this Weyl element");
        h = *cert;
      }
      enumerate_grid(query, h, budget, visit);
      return cert.has_value() && h % *cert == 0;
    }
    case Method::kAuto:
      break;
  }
  throw PreconditionError("unresolved backend");
}

KloostermanSet KloostermanSet::build(const KloostermanQuery& query, const SetOptions& options,
                                     Budget& budget) {
  query.validate();
  KloostermanSet s;
  s.query_ = query;
  s.method_ = options.method == Method::kAuto ? choose_method(query) : options.method;
  s.x_len_ = static_cast<std::size_t>(query.n * (query.n - 1) / 2);
  s.y_len_ = bruhat::u_w_pattern(query.w).size();
  const groups::CongruenceSpec spec{query.n, query.q, groups::Flavor::kGammaQNatural};
  const ExactMatrix torus_w = ExactMatrix::diagonal(query.cstar()) * query.w.to_matrix();
  auto store = [&](const Rational& v) {
    require(v.get_num().fits_slong_p() && v.get_den().fits_slong_p(), "representative entry too large");
    s.data_.push_back({v.get_num().get_si(), v.get_den().get_si()});
  };
  SetOptions opts = options;
  opts.method = s.method_;
  s.complete_ = enumerate(query, opts, budget, [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    for (const auto& v : x) require(v >= 0 && v < 1, "x entry outside [0,1)");
    for (const auto& v : y) require(v >= 0 && v < 1, "y entry outside [0,1)");
    if (options.verify) {
      const ExactMatrix g = x_from_entries(query.n, x) * torus_w * y_from_entries(query.w, y);
      if (!groups::is_member(g, spec)) throw IntegrityError("enumerated representative is not a member");
    }
    for (const auto& v : x) store(v);
    for (const auto& v : y) store(v);
    ++s.count_;
  });
  if (options.verify) {
    auto keys = s.sorted_keys();
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw IntegrityError("duplicate representatives in Kloosterman set");
  }
  return s;
}

std::vector<Rational> KloostermanSet::x_entries(std::size_t k) const {
  std::vector<Rational> out;
  const std::size_t base = k * (x_len_ + y_len_);
  for (std::size_t t = 0; t < x_len_; ++t)
    out.push_back(exactalg::make_rational(data_[base + t].num, data_[base + t].den));
  return out;
}

std::vector<Rational> KloostermanSet::y_entries(std::size_t k) const {
  std::vector<Rational> out;
  const std::size_t base = k * (x_len_ + y_len_) + x_len_;
  for (std::size_t t = 0; t < y_len_; ++t)
    out.push_back(exactalg::make_rational(data_[base + t].num, data_[base + t].den));
  return out;
}

ExactMatrix KloostermanSet::x_matrix(std::size_t k) const { return x_from_entries(query_.n, x_entries(k)); }
ExactMatrix KloostermanSet::y_matrix(std::size_t k) const { return y_from_entries(query_.w, y_entries(k)); }

std::string KloostermanSet::key(std::size_t k) const {
  std::string s;
  const std::size_t base = k * (x_len_ + y_len_);
  for (std::size_t t = 0; t < x_len_ + y_len_; ++t) {
    if (t) s += t == x_len_ ? '|' : ',';
    s += std::to_string(data_[base + t].num) + '/' + std::to_string(data_[base + t].den);
  }
  return s;
}

std::vector<std::string> KloostermanSet::sorted_keys() const {
  std::vector<std::string> keys;
  keys.reserve(count_);
  for (std::size_t k = 0; k < count_; ++k) keys.push_back(key(k));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace gammaq::kloosterman
