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


#include <algorithm>
#include <ostream>
#include <sstream>

#include "commands.hpp"

#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/ffchar/char_table.hpp"
#include "gammaq/ffchar/gelfand_graev.hpp"
#include "gammaq/ffchar/parabolic.hpp"
#include "gammaq/kloosterman/laws.hpp"
#include "gammaq/latcount/ball.hpp"
#include "gammaq/latcount/lift.hpp"

namespace gammaq::cli {

namespace {

using exactalg::Integer;
using exactalg::Rational;
using exactalg::to_string;

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), width_(header.size()) { row(header); }

  void row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw IntegrityError("CSV row has the wrong width");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << csv_field(fields[i]);
    }
    out_ << '\n';
    out_.flush();
    ++rows_;
  }

  std::size_t rows() const { return rows_ - 1; }

 private:
  std::ostream& out_;
  std::size_t width_;
  std::size_t rows_ = 0;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

std::string u(std::uint64_t x) { return std::to_string(x); }
std::string i(std::int64_t x) { return std::to_string(x); }

void ball_grid(const ExperimentGrid& g, Record& r, Budget& budget, std::ostream& csv) {
  CsvWriter w(csv, {"n", "q", "T", "norm", "count", "main_term", "secondary_term", "ratio", "ratio_approx",
                    "upper_shape", "lower_shape"});
  const latcount::Norm norm = latcount::norm_from_name(g.norm);
  const double eps = Rational(g.epsilon).get_d();
  double max_ratio = 0;
  for (int n : g.n)
    for (auto q : g.q)
      for (auto T : g.T) {
        const auto rep = latcount::count_ball(n, q, T, budget, norm);
        const auto shapes = latcount::predicted_ball_bound(n, q, T, eps);
        max_ratio = std::max(max_ratio, rep.ratio.get_d());
        w.row({i(n), i(q), i(T), latcount::norm_name(norm), to_string(rep.count), to_string(rep.main_term),
               to_string(rep.secondary_term), to_string(rep.ratio), fmt(rep.ratio.get_d()), to_string(shapes.upper),
               to_string(shapes.lower)});
      }
  r.payload["rows"] = w.rows();
  r.payload["max_ratio"] = max_ratio;
}

void lift_census(const ExperimentGrid& g, Record& r, Budget& budget, std::ostream& csv) {
  CsvWriter w(csv, {"n", "q", "epsilon", "classes", "total", "sampled", "seed", "max_norm", "threshold",
                    "failure_count", "failure_fraction", "histogram"});
  latcount::CensusOptions opt;
  opt.epsilon = Rational(g.epsilon);
  opt.seed = g.seed;
  opt.sample_size = g.sample_size;
  std::uint64_t failures = 0;
  for (int n : g.n)
    for (auto q : g.q) {
      const auto rep = latcount::lifting_census(n, q, opt, budget);
      std::string hist;
      for (const auto& [norm, count] : rep.histogram) {
        if (!hist.empty()) hist += ';';
        hist += i(norm) + ":" + u(count);
      }
      failures += rep.failure_count;
      w.row({i(n), i(q), to_string(rep.epsilon), u(rep.classes.size()), to_string(rep.total),
             rep.sampled ? "true" : "false", u(rep.seed), i(rep.max_norm), fmt(rep.threshold), u(rep.failure_count),
             fmt(rep.failure_fraction()), hist});
    }
  r.payload["rows"] = w.rows();
  r.payload["failures"] = failures;
  r.seed = g.seed;
  if (failures > 0) r.status = Status::kWarn;
}

void cab_growth(const ExperimentGrid& g, Record& r, Budget& budget, std::ostream& csv) {
  CsvWriter w(csv, {"n", "p", "alpha", "beta", "count", "bound", "bound_exponent", "ratio_approx", "within_bound",
                    "index_identity"});
  bool ok = true;
  for (int n : g.n)
    for (auto p : g.p)
      for (auto alpha : g.alpha)
        for (auto beta : g.beta) {
          const auto cab = kloosterman::cab_count_and_bound(n, p, static_cast<int>(alpha), static_cast<int>(beta), budget);
          ok = ok && cab.within_bound() && cab.remark_identity;
          const Rational ratio(cab.count, cab.bound);
          w.row({i(n), i(p), i(alpha), i(beta), to_string(cab.count), to_string(cab.bound), i(cab.bound_exponent),
                 fmt(ratio.get_d()), cab.within_bound() ? "true" : "false", cab.remark_identity ? "true" : "false"});
        }
  r.payload["rows"] = w.rows();
  if (!ok) r.status = Status::kFail;
}

void gg_table(const ExperimentGrid& g, Record& r, Budget& budget, std::ostream& csv) {
  CsvWriter w(csv, {"n", "p", "source", "dim", "twists", "sum_value", "trivial_sum_value"});
  bool ok = true;
  for (int n : g.n)
    for (auto p64 : g.p) {
      const int p = static_cast<int>(p64);
      // The oracle certifies the formula whenever the group is small enough.
      const bool oracle = ffchar::gl_order(n, p) <= 20000;
      const auto chi = oracle ? ffchar::cuspidal_unipotent_char(n, p, budget) : ffchar::cuspidal_unipotent_formula(n, p);
      std::vector<std::vector<std::int64_t>> twists{{}};
      for (int k = 0; k + 1 < n; ++k) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& v : twists)
          for (std::int64_t a = 1; a < p; ++a) {
            auto t = v;
            t.push_back(a);
            next.push_back(std::move(t));
          }
        twists = std::move(next);
      }
      std::string value;
      for (const auto& t : twists) {
        const auto rep = ffchar::gg_sum(chi, budget, t);
        const std::string v = rep.rational ? to_string(rep.sum_value) : "irrational";
        if (value.empty()) value = v;
        if (v != value) value = "twist-dependent";
      }
      ffchar::UnipotentClassFunction trivial{n, p, {}};
      for (const auto& part : ffchar::partitions(n)) trivial.values[part] = 1;
      const auto triv = ffchar::gg_sum(trivial, budget);
      ok = ok && value == "1";
      w.row({i(n), i(p), oracle ? "oracle" : "formula", i(chi.dim()), u(twists.size()), value,
             triv.rational ? to_string(triv.sum_value) : "irrational"});
    }
  r.payload["rows"] = w.rows();
  if (!ok) r.status = Status::kFail;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ExperimentGrid with_defaults(const std::string& kind, ExperimentGrid g) {
  auto fill = [](auto& axis, auto values) {
    if (axis.empty()) axis = values;
  };
  if (kind == "ball_grid") {
    fill(g.n, std::vector<int>{2});
    fill(g.q, std::vector<std::int64_t>{1, 2, 3, 5});
    fill(g.T, std::vector<std::int64_t>{5, 10, 20, 40});
  } else if (kind == "lift_census") {
    fill(g.n, std::vector<int>{2});
    fill(g.q, std::vector<std::int64_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
  } else if (kind == "cab_growth") {
    fill(g.n, std::vector<int>{3});
    fill(g.p, std::vector<std::int64_t>{2, 3});
    fill(g.alpha, std::vector<std::int64_t>{0, 1});
    fill(g.beta, std::vector<std::int64_t>{0, 1});
  } else if (kind == "gg_table") {
    fill(g.n, std::vector<int>{2, 3});
    fill(g.p, std::vector<std::int64_t>{2, 3, 5});
  } else {
    throw PreconditionError("unknown experiment kind: " + kind);
  }
  std::sort(g.n.begin(), g.n.end());
  for (auto* axis : {&g.q, &g.T, &g.p, &g.alpha, &g.beta}) std::sort(axis->begin(), axis->end());
  return g;
}

Task experiment_task(const std::string& kind, const ExperimentGrid& grid, std::ostream& csv) {
  const ExperimentGrid g = with_defaults(kind, grid);
  Task t;
  t.header.command = "experiment";
  t.header.parameters["kind"] = kind;
  std::vector<std::int64_t> ns(g.n.begin(), g.n.end());
  t.header.parameters["n"] = to_json(ns);
  if (kind == "ball_grid" || kind == "lift_census") t.header.parameters["q"] = to_json(g.q);
  if (kind == "ball_grid") {
    t.header.parameters["T"] = to_json(g.T);
    t.header.parameters["norm"] = g.norm;
  }
  if (kind == "cab_growth" || kind == "gg_table") t.header.parameters["p"] = to_json(g.p);
  if (kind == "cab_growth") {
    t.header.parameters["alpha"] = to_json(g.alpha);
    t.header.parameters["beta"] = to_json(g.beta);
  }
  if (kind == "lift_census" || kind == "ball_grid") t.header.parameters["epsilon"] = g.epsilon;
  if (kind == "ball_grid") t.header.anchor = "ball-count";
  if (kind == "lift_census") t.header.anchor = "optimal-lifting";
  if (kind == "cab_growth") t.header.anchor = "kloosterman-set-count-bound";
  if (kind == "gg_table") t.header.anchor = "gelfand-graev-average";
  t.body = [kind, g, &csv](Record& r, Budget& budget) {
    if (kind == "ball_grid") ball_grid(g, r, budget, csv);
    if (kind == "lift_census") lift_census(g, r, budget, csv);
    if (kind == "cab_growth") cab_growth(g, r, budget, csv);
    if (kind == "gg_table") gg_table(g, r, budget, csv);
  };
  return t;
}

}  // namespace gammaq::cli
