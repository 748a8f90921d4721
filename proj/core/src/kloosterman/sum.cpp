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

#include "gammaq/kloosterman/sum.hpp"

#include "gammaq/bruhat/compatibility.hpp"
#include "gammaq/exactalg/numtheory.hpp"

namespace gammaq::kloosterman {

KloostermanResult kloosterman_sum(const KloostermanQuery& query, const SetOptions& options, Budget& budget) {
  query.validate();
  KloostermanResult r;
  r.outside_hypotheses = !exactalg::is_squarefree(query.q);
  r.method = options.method == Method::kAuto ? choose_method(query) : options.method;
  r.compatible = bruhat::compatibility(query.w, query.M, query.N, query.v, query.c);
  if (!r.compatible) return r;
  const KloostermanSet set = KloostermanSet::build(query, options, budget);
  r.set_size = set.size();
  r.complete = set.complete();
  r.sum = sum_over_set(set, query);
  return r;
}

PhaseSum sum_over_set(const KloostermanSet& set, const KloostermanQuery& phases) {
  require(phases.n == set.query().n && phases.w == set.query().w, "phase query does not match the set");
  const PhaseEvaluator eval(phases);
  PhaseSum s;
  for (std::size_t k = 0; k < set.size(); ++k) s.add(eval(set.x_entries(k), set.y_entries(k)));
  return s;
}

}  // namespace gammaq::kloosterman
