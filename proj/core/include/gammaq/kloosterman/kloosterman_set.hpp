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

#ifndef GAMMAQ_KLOOSTERMAN_KLOOSTERMAN_SET_HPP
#define GAMMAQ_KLOOSTERMAN_KLOOSTERMAN_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/kloosterman/query.hpp"

namespace gammaq::kloosterman {

enum class Method { kAuto, kEchelon, kWstarLattice, kGridOracle, kClassicalN2 };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct SetOptions {
  Method method = Method::kAuto;
  std::int64_t height = 0;  // grid oracle; 0 means the certified height
  bool verify = true;       // re-check membership of every representative
};

// Canonical double-coset representatives (x, y), entries in [0, 1).
class KloostermanSet {
 public:
  static KloostermanSet build(const KloostermanQuery& query, const SetOptions& options, Budget& budget);

  const KloostermanQuery& query() const { return query_; }
  Method method() const { return method_; }
  // False only for grid-oracle runs without a certified height.
  bool complete() const { return complete_; }
  std::size_t size() const { return count_; }

  std::vector<Rational> x_entries(std::size_t k) const;
  std::vector<Rational> y_entries(std::size_t k) const;
  ExactMatrix x_matrix(std::size_t k) const;
  ExactMatrix y_matrix(std::size_t k) const;
  // Canonical sortable key of representative k.
  std::string key(std::size_t k) const;
  // Sorted keys, for comparing sets across backends.
  std::vector<std::string> sorted_keys() const;

 private:
  struct Entry {
    std::int64_t num;
    std::int64_t den;
  };
  KloostermanQuery query_;
  Method method_ = Method::kEchelon;
  bool complete_ = true;
  std::size_t count_ = 0;
  std::size_t x_len_ = 0, y_len_ = 0;
  std::vector<Entry> data_;
};

// Resolves kAuto for a query.
Method choose_method(const KloostermanQuery& query);
// Runs the chosen backend.  Returns whether the result is complete.
bool enumerate(const KloostermanQuery& query, const SetOptions& options, Budget& budget,
               const RepVisitor& visit);

}  // namespace gammaq::kloosterman

#endif  // GAMMAQ_KLOOSTERMAN_KLOOSTERMAN_SET_HPP
