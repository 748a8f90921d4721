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


#ifndef GAMMAQ_LATCOUNT_LIFT_HPP
#define GAMMAQ_LATCOUNT_LIFT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/exactalg/matrix.hpp"
#include "gammaq/latcount/det_one.hpp"

namespace gammaq::latcount {

using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::Rational;

struct Lift {
  IntMatrix gamma;
  std::int64_t norm = 0;
  ExactMatrix matrix(int n) const;
};

// A lift of gbar (entries mod q, det = 1 mod q, n in {2, 3}) to SL_n(Z) of
// least max-norm.  Norm bounds are tried in increasing order, so the first
// hit is minimal.
Lift smallest_lift(int n, std::int64_t q, const IntMatrix& gbar, Budget& budget);

// All of SL_n(Z/qZ), entries in [0, q), in lexicographic order.
std::vector<IntMatrix> sl_mod_q(int n, std::int64_t q, Budget& budget);

// norm > q^exponent, decided exactly.
bool exceeds_threshold(std::int64_t norm, std::int64_t q, const Rational& exponent);

struct CensusOptions {
  Rational epsilon{1, 5};
  // Above this many classes a pseudorandom sample is used instead.
  std::uint64_t exhaustive_limit = 1'000'000;
  std::uint64_t sample_size = 10'000;
  std::uint64_t seed = 1;
};

struct LiftEntry {
  IntMatrix residues;
  std::int64_t norm = 0;
};

struct LiftReport {
  int n = 2;
  std::int64_t q = 1;
  Rational epsilon;
  Rational exponent;  // 1 + 1/n + epsilon
  double threshold = 0;
  Integer total;      // |SL_n(Z/qZ)|
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<LiftEntry> classes;
  std::map<std::int64_t, std::uint64_t> histogram;  // norm -> number of classes
  std::uint64_t failure_count = 0;
  std::int64_t max_norm = 0;
  double failure_fraction() const {
    return classes.empty() ? 0.0 : static_cast<double>(failure_count) / static_cast<double>(classes.size());
  }
};

LiftReport lifting_census(int n, std::int64_t q, const CensusOptions& options, Budget& budget);

}  // namespace gammaq::latcount

#endif  // GAMMAQ_LATCOUNT_LIFT_HPP
