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


#include "gammaq/latcount/ball.hpp"

#include <cmath>

#include "gammaq/groups/congruence.hpp"
#include "gammaq/latcount/det_one.hpp"

namespace gammaq::latcount {

namespace {

IntMatrix identity_residues(int n) {
  IntMatrix r(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i * n + i)] = 1;
  return r;
}

Integer power(std::int64_t b, int e) {
  return exactalg::pow_integer(Integer(static_cast<long>(b)), static_cast<unsigned long>(e));
}

}  // namespace

BallCountReport count_ball(int n, std::int64_t q, std::int64_t T, Budget& budget, Norm norm) {
  require(n == 2 || n == 3, "ball counting supports n = 2 and n = 3");
  require(q >= 1, "level must be positive");
  require(T >= 1, "radius must be at least 1");
  BallCountReport r;
  r.n = n;
  r.q = q;
  r.T = T;
  r.norm = norm;
  const DetOneBox box(n, q, identity_residues(n), T);
  if (norm == Norm::kMax) {
    r.count = Integer(static_cast<unsigned long>(box.count(budget)));
  } else {
    const std::int64_t t2 = T * T;
    std::uint64_t c = 0;
    box.for_each(budget, [&](const IntMatrix& g) {
      std::int64_t s = 0;
      for (auto x : g) s += x * x;
      if (s <= t2) ++c;
      return true;
    });
    r.count = Integer(static_cast<unsigned long>(c));
  }
  r.main_term = Rational(power(T, n * (n - 1)), groups::index_sl(n, q));
  r.main_term.canonicalize();
  r.secondary_term = Rational(power(T, n * (n - 1) / 2));
  r.ratio = Rational(r.count) / (r.main_term + r.secondary_term);
  return r;
}

BallShapes predicted_ball_bound(int n, std::int64_t q, std::int64_t T, double epsilon) {
  require(n >= 2 && q >= 1 && T >= 1, "invalid ball parameters");
  BallShapes s;
  Rational main(power(T, n * (n - 1)), power(q, n * n - 1));
  main.canonicalize();
  s.upper = main + Rational(power(T, n * (n - 1) / 2));
  Rational tq(power(T, n * (n - 1) / 2), power(q, n * (n - 1) / 2));
  tq.canonicalize();
  s.lower = main + tq + 1;
  s.upper_with_epsilon = std::pow(static_cast<double>(T) * static_cast<double>(q), epsilon) * s.upper.get_d();
  return s;
}

std::string norm_name(Norm norm) { return norm == Norm::kMax ? "max" : "frobenius"; }

Norm norm_from_name(const std::string& name) {
  if (name == "max") return Norm::kMax;
  if (name == "frobenius") return Norm::kFrobenius;
  throw PreconditionError("unknown norm: " + name);
}

}  // namespace gammaq::latcount
