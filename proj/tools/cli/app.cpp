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


#include "app.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "commands.hpp"
#include "report.hpp"

#include "gammaq/bruhat/decompose.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/ffchar/gelfand_graev.hpp"
#include "gammaq/ffchar/parabolic.hpp"
#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/laws.hpp"
#include "gammaq/kloosterman/sum.hpp"
#include "gammaq/latcount/ball.hpp"
#include "gammaq/latcount/lift.hpp"

namespace gammaq::cli {

namespace {

using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::Rational;
using exactalg::to_string;

constexpr int kUsage = 2;

struct Common {
  std::optional<std::uint64_t> budget;
  int jobs = 1;
};

std::uint64_t resolve_budget(const Common& common, Size size) {
  return common.budget ? *common.budget : default_budget(size);
}

// Runs a single-record command.  Precondition errors are usage errors here,
// since they come from the flags.
int run_single(const Task& task, std::uint64_t budget_limit, std::ostream& out, std::ostream& err) {
  Record r = task.header;
  Budget budget(budget_limit);
  try {
    task.body(r, budget);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    r.status = Status::kResourceExceeded;
    r.payload["error"] = e.what();
    r.payload["processed"] = e.processed();
  } catch (const IntegrityError& e) {
    r.status = Status::kFail;
    r.payload["error"] = std::string("integrity: ") + e.what();
  }
  Reporter reporter(out);
  reporter.emit(r);
  return exit_code(reporter.overall());
}

Json matrix_json(const ExactMatrix& m) { return m.to_string(); }

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json int_matrix_json(const latcount::IntMatrix& a, int n) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(a[static_cast<std::size_t>(i * n + j)]);
    rows.push_back(row);
  }
  return rows;
}

// --- kloosterman ------------------------------------------------------------

struct KloostermanFlags {
  int n = 2;
  std::int64_t q = 1;
  std::string w = "wl";
  std::vector<std::int64_t> M, N, c;
  std::vector<int> v;
  std::string backend = "auto";
  std::int64_t height = 0;
  int precision = 15;
  bool show_set = false;
};

Task kloosterman_task(const KloostermanFlags& f) {
  Task t;
  t.header.command = "kloosterman";
  auto& p = t.header.parameters;
  p["n"] = f.n;
  p["q"] = f.q;
  p["w"] = f.w;
  p["M"] = to_json(f.M);
  p["N"] = to_json(f.N);
  p["c"] = to_json(f.c);
  if (!f.v.empty()) p["v"] = f.v;
  p["backend"] = f.backend;
  if (f.height > 0) p["height"] = f.height;
  p["precision"] = f.precision;
  const auto w = bruhat::weyl_from_name(f.n, f.w);
  const auto kind = bruhat::classify(w);
  t.header.anchor = kind == bruhat::WeylKind::kIdentity ? "trivial-weyl-sum"
                    : kind == bruhat::WeylKind::kWStar && f.n >= 3 ? "wstar-support-and-size"
                                                                   : "kloosterman-definition";
  t.body = [f, w, kind](Record& r, Budget& budget) {
    require(f.precision >= 1 && f.precision <= 1000, "precision must lie in [1, 1000]");
    const auto query = kloosterman::KloostermanQuery::make(f.n, f.q, w, f.c, f.M, f.N, f.v);
    kloosterman::SetOptions opt;
    opt.method = kloosterman::method_from_name(f.backend);
    opt.height = f.height;
    const auto set = kloosterman::KloostermanSet::build(query, opt, budget);
    const auto res = kloosterman::kloosterman_sum(query, opt, budget);
    const auto verdict = kloosterman::divisibility_check(f.n, f.q, w, query.c);
    auto& out = r.payload;
    out["query"] = query.describe();
    out["weyl"] = w.to_string();
    out["method"] = kloosterman::method_name(res.method);
    out["complete"] = res.complete;
    out["set_size"] = res.set_size;
    out["compatible"] = res.compatible;
    out["outside_hypotheses"] = res.outside_hypotheses;
    out["divisibility"] = {{"case", kloosterman::divisibility_case_name(verdict.which)},
                           {"admissible", verdict.admissible},
                           {"strict_admissible", verdict.strict_admissible},
                           {"reason", verdict.reason}};
    bool vanishes_by_support = false;
    if (kind == bruhat::WeylKind::kWStar && f.n >= 3) {
      const auto s = kloosterman::wstar_support_check(f.n, f.q, query.c);
      vanishes_by_support = s.form == kloosterman::SupportForm::kVanishes;
      out["support"] = {{"form", kloosterman::support_form_name(s.form)}, {"r", s.r}, {"s", s.s}, {"both", s.both}};
    }
    const auto value = res.sum.evaluate(f.precision);
    const auto exact = res.sum.integer_value();
    out["phases"] = res.sum.to_string();
    out["exact_value"] = exact ? Json(to_string(*exact)) : Json(nullptr);
    out["value"] = {{"real", value.real},
                    {"imag", value.imag},
                    {"abs_approx", value.abs_approx},
                    {"error", "1e-" + std::to_string(value.digits)}};
    std::string reason = verdict.reason;
    if (!res.compatible) reason = "compatibility condition fails; the sum vanishes";
    if (vanishes_by_support) reason = "w_* support: c lies in neither geometric-progression family";
    out["reason"] = reason;
    if (f.show_set) out["set"] = set.sorted_keys();
    Status st = Status::kPass;
    if (!res.complete) st = Status::kWarn;
    if (res.set_size > 0 && !verdict.admissible) st = Status::kFail;
    if (vanishes_by_support && !res.sum.value_is_zero()) st = Status::kFail;
    r.status = st;
  };
  return t;
}

// --- bruhat -----------------------------------------------------------------

Task bruhat_task(const std::string& matrix, std::int64_t q, bool normalize) {
  Task t;
  t.header.command = "bruhat";
  t.header.parameters["g"] = matrix;
  if (q > 0) t.header.parameters["q"] = q;
  t.header.parameters["normalize"] = normalize;
  t.header.anchor = "bruhat-decomposition";
  t.body = [matrix, q, normalize](Record& r, Budget&) {
    const ExactMatrix g = ExactMatrix::parse(matrix);
    const auto d = bruhat::bruhat_decompose(g, normalize);
    auto& out = r.payload;
    out["w"] = d.w.to_string();
    out["x"] = matrix_json(d.x);
    out["torus"] = matrix_json(d.torus);
    out["y"] = matrix_json(d.y);
    out["c"] = rationals_json(d.c);
    out["torus_sign"] = d.torus_sign;
    out["left_gamma"] = matrix_json(d.left_gamma);
    out["right_gamma"] = matrix_json(d.right_gamma);
    const bool recomposes = d.recompose() == g;
    const bool minors = bruhat::moduli_from_minors(g, d.w) == d.c;
    out["recomposes"] = recomposes;
    out["minors_agree"] = minors;
    if (q > 0) {
      out["member_natural"] = groups::is_member(g, {static_cast<int>(g.size()), q, groups::Flavor::kGammaQNatural});
      out["member_gamma"] = groups::is_member(g, {static_cast<int>(g.size()), q, groups::Flavor::kGammaQ});
    }
    r.status = recomposes && minors ? Status::kPass : Status::kFail;
  };
  return t;
}

// --- indices ----------------------------------------------------------------

Task indices_task(int n, std::int64_t q, bool exhaustive) {
  Task t;
  t.header.command = "indices";
  t.header.parameters["n"] = n;
  t.header.parameters["q"] = q;
  t.header.parameters["exhaustive"] = exhaustive;
  t.header.anchor = "sl-index-formula";
  t.body = [n, q, exhaustive](Record& r, Budget&) {
    require(n >= 1 && q >= 1, "n and q must be positive");
    const Integer v = groups::index_sl(n, q);
    const Integer nq = groups::unipotent_index(n, q);
    r.payload["V_q"] = to_string(v);
    r.payload["N_q"] = to_string(nq);
    if (exhaustive) {
      const Integer dv = groups::count_sl_mod_q(n, q);
      const Integer dn = groups::count_unipotent_cosets(n, q);
      r.payload["V_q_exhaustive"] = to_string(dv);
      r.payload["N_q_coset_count"] = to_string(dn);
      r.status = dv == v && dn == nq ? Status::kPass : Status::kFail;
    }
  };
  return t;
}

// --- ggsum ------------------------------------------------------------------

Task ggsum_task(int n, int p, const std::vector<std::int64_t>& twist, const std::string& source) {
  Task t;
  t.header.command = "ggsum";
  t.header.parameters["n"] = n;
  t.header.parameters["p"] = p;
  if (!twist.empty()) t.header.parameters["twist"] = to_json(twist);
  t.header.parameters["source"] = source;
  t.header.anchor = "gelfand-graev-average";
  t.body = [n, p, twist, source](Record& r, Budget& budget) {
    require(source == "oracle" || source == "formula", "source must be oracle or formula");
    const auto chi = source == "oracle" ? ffchar::cuspidal_unipotent_char(n, p, budget)
                                        : ffchar::cuspidal_unipotent_formula(n, p);
    const auto rep = ffchar::gg_sum(chi, budget, twist);
    Json values = Json::object();
    for (const auto& [part, v] : chi.values) values[ffchar::partition_to_string(part)] = v;
    r.payload["unipotent_values"] = values;
    r.payload["dim"] = chi.dim();
    r.payload["expected_dim"] = to_string(ffchar::cuspidal_dim(n, p));
    r.payload["twist"] = to_json(rep.twist);
    r.payload["raw"] = rep.raw.to_string();
    r.payload["sum_value"] = rep.rational ? Json(to_string(rep.sum_value)) : Json(nullptr);
    r.payload["real_approx"] = rep.real_approx;
    r.payload["imag_approx"] = rep.imag_approx;
    const bool ok = rep.rational && rep.sum_value == 1 && Integer(static_cast<long>(chi.dim())) == ffchar::cuspidal_dim(n, p);
    r.status = ok ? Status::kPass : Status::kFail;
  };
  return t;
}

// --- lift -------------------------------------------------------------------

Task lift_task(int n, std::int64_t q, const std::string& residues, const std::string& epsilon, bool census,
               std::uint64_t seed) {
  Task t;
  t.header.command = "lift";
  t.header.parameters["n"] = n;
  t.header.parameters["q"] = q;
  t.header.parameters["epsilon"] = epsilon;
  if (census) {
    t.header.parameters["census"] = true;
    t.header.seed = seed;
  } else {
    t.header.parameters["g"] = residues;
  }
  t.header.anchor = "optimal-lifting";
  t.body = [=](Record& r, Budget& budget) {
    const Rational eps(epsilon);
    const Rational exponent = Rational(1) + Rational(1, n) + eps;
    if (census) {
      latcount::CensusOptions opt;
      opt.epsilon = eps;
      opt.seed = seed;
      const auto rep = latcount::lifting_census(n, q, opt, budget);
      r.payload["classes"] = rep.classes.size();
      r.payload["total"] = to_string(rep.total);
      r.payload["sampled"] = rep.sampled;
      r.payload["exponent"] = to_string(rep.exponent);
      r.payload["threshold"] = rep.threshold;
      r.payload["max_norm"] = rep.max_norm;
      r.payload["failure_count"] = rep.failure_count;
      r.payload["failure_fraction"] = rep.failure_fraction();
      Json hist = Json::object();
      for (const auto& [norm, count] : rep.histogram) hist[std::to_string(norm)] = count;
      r.payload["histogram"] = hist;
      if (rep.failure_count > 0) r.status = Status::kWarn;
      return;
    }
    const ExactMatrix g = ExactMatrix::parse(residues);
    require(static_cast<int>(g.size()) == n, "matrix size must equal n");
    latcount::IntMatrix gbar;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        require(exactalg::is_integer(g(i, j)), "residues must be integers");
        gbar.push_back(exactalg::mod_floor(exactalg::to_int64(g(i, j).get_num()), q));
      }
    const auto lift = latcount::smallest_lift(n, q, gbar, budget);
    r.payload["residues"] = int_matrix_json(gbar, n);
    r.payload["lift"] = int_matrix_json(lift.gamma, n);
    r.payload["norm"] = lift.norm;
    r.payload["exponent"] = to_string(exponent);
    r.payload["exceeds_threshold"] = latcount::exceeds_threshold(lift.norm, q, exponent);
    if (latcount::exceeds_threshold(lift.norm, q, exponent)) r.status = Status::kWarn;
  };
  return t;
}

// --- count-ball -------------------------------------------------------------

Task count_ball_task(int n, std::int64_t q, std::int64_t T, const std::string& norm, const std::string& epsilon) {
  Task t;
  t.header.command = "count-ball";
  t.header.parameters["n"] = n;
  t.header.parameters["q"] = q;
  t.header.parameters["T"] = T;
  t.header.parameters["norm"] = norm;
  t.header.parameters["epsilon"] = epsilon;
  t.header.anchor = "ball-count";
  t.body = [=](Record& r, Budget& budget) {
    const auto rep = latcount::count_ball(n, q, T, budget, latcount::norm_from_name(norm));
    const auto shapes = latcount::predicted_ball_bound(n, q, T, Rational(epsilon).get_d());
    r.payload["count"] = to_string(rep.count);
    r.payload["main_term"] = to_string(rep.main_term);
    r.payload["secondary_term"] = to_string(rep.secondary_term);
    r.payload["ratio"] = to_string(rep.ratio);
    r.payload["ratio_approx"] = rep.ratio.get_d();
    r.payload["upper_shape"] = to_string(shapes.upper);
    r.payload["lower_shape"] = to_string(shapes.lower);
    r.payload["upper_with_epsilon"] = shapes.upper_with_epsilon;
  };
  return t;
}

void add_common(CLI::App* sub, Common& common, bool jobs) {
  sub->add_option("--budget", common.budget, "Candidate-count ceiling (default from GAMMAQ_BUDGET or the size)");
  if (jobs) sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gammaq: exact Kloosterman sums, lattice counts and finite-field characters for Gamma(q)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;

  std::string suite = "all", size = "smoke";
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("suite", suite, "groups, bruhat, kloosterman, latcount, ffchar or all")
      ->check(CLI::IsMember({"groups", "bruhat", "kloosterman", "latcount", "ffchar", "all"}));
  verify->add_option("size", size, "smoke, desk or extended")->check(CLI::IsMember({"smoke", "desk", "extended"}));
  add_common(verify, common, true);

  KloostermanFlags kf;
  auto* klo = app.add_subcommand("kloosterman", "Evaluate one Kloosterman sum");
  klo->add_option("--n", kf.n, "Rank")->required()->check(CLI::Range(2, 8));
  klo->add_option("--q", kf.q, "Level")->check(CLI::PositiveNumber);
  klo->add_option("--w", kf.w, "id, wstar, wl, w1, w1inv or a 1-based permutation");
  klo->add_option("--M", kf.M, "M_1,...,M_{n-1}")->delimiter(',')->required();
  klo->add_option("--N", kf.N, "N_1,...,N_{n-1}")->delimiter(',')->required();
  klo->add_option("--c", kf.c, "c_1,...,c_{n-1}")->delimiter(',')->required();
  klo->add_option("--v", kf.v, "Signs v_1,...,v_{n-1}")->delimiter(',');
  klo->add_option("--backend", kf.backend, "auto, echelon, wstar_lattice, grid_oracle or classical_n2");
  klo->add_option("--height", kf.height, "Grid-oracle height (0 = certified)");
  klo->add_option("--precision", kf.precision, "Decimal digits of the numeric value");
  klo->add_flag("--show-set", kf.show_set, "Include the set representatives");
  add_common(klo, common, false);

  std::string matrix;
  std::int64_t bq = 0;
  bool normalize = false;
  auto* bru = app.add_subcommand("bruhat", "Bruhat decomposition of a rational matrix");
  bru->add_option("--g", matrix, "Rows separated by ';', entries by ','")->required();
  bru->add_option("--q", bq, "Also report congruence membership at this level");
  bru->add_flag("--normalize", normalize, "Reduce x and y modulo integral unipotents");
  add_common(bru, common, false);

  int in = 2;
  std::int64_t iq = 1;
  bool exhaustive = false;
  auto* ind = app.add_subcommand("indices", "Group and unipotent indices");
  ind->add_option("--n", in, "Rank")->required()->check(CLI::Range(1, 12));
  ind->add_option("--q", iq, "Level")->required()->check(CLI::PositiveNumber);
  ind->add_flag("--exhaustive", exhaustive, "Cross-check against exhaustive counts");
  add_common(ind, common, false);

  std::string kind, out_path = "-";
  ExperimentGrid grid;
  auto* exp = app.add_subcommand("experiment", "Write an experiment grid as CSV");
  exp->add_option("--kind", kind, "ball_grid, lift_census, cab_growth or gg_table")
      ->required()
      ->check(CLI::IsMember({"ball_grid", "lift_census", "cab_growth", "gg_table"}));
  exp->add_option("--n", grid.n, "Ranks")->delimiter(',');
  exp->add_option("--q", grid.q, "Levels")->delimiter(',');
  exp->add_option("--T", grid.T, "Radii")->delimiter(',');
  exp->add_option("--p", grid.p, "Primes")->delimiter(',');
  exp->add_option("--alpha", grid.alpha, "alpha values")->delimiter(',');
  exp->add_option("--beta", grid.beta, "beta values")->delimiter(',');
  exp->add_option("--epsilon", grid.epsilon, "Exponent slack as a rational");
  exp->add_option("--norm", grid.norm, "max or frobenius")->check(CLI::IsMember({"max", "frobenius"}));
  exp->add_option("--seed", grid.seed, "Sampling seed");
  exp->add_option("--sample-size", grid.sample_size, "Classes sampled when the census is too large");
  exp->add_option("--out", out_path, "CSV path; '-' writes CSV to stdout and the report to stderr");
  add_common(exp, common, false);

  int gn = 2, gp = 2;
  std::vector<std::int64_t> twist;
  std::string source = "oracle";
  auto* gg = app.add_subcommand("ggsum", "Gelfand-Graev average of the cuspidal character");
  gg->add_option("--n", gn, "Rank")->required()->check(CLI::Range(2, 3));
  gg->add_option("--p", gp, "Prime")->required();
  gg->add_option("--twist", twist, "Superdiagonal coefficients a_1,...,a_{n-1}")->delimiter(',');
  gg->add_option("--source", source, "oracle or formula")->check(CLI::IsMember({"oracle", "formula"}));
  add_common(gg, common, false);

  int ln = 2;
  std::int64_t lq = 2;
  std::string residues, lift_eps = "1/5";
  bool census = false;
  std::uint64_t lift_seed = 1;
  auto* lift = app.add_subcommand("lift", "Smallest integral lift of a class in SL_n(Z/qZ)");
  lift->add_option("--n", ln, "Rank")->required()->check(CLI::Range(2, 3));
  lift->add_option("--q", lq, "Level")->required()->check(CLI::Range(2, 1000));
  lift->add_option("--g", residues, "Residues; rows separated by ';'");
  lift->add_flag("--census", census, "Run the census over all classes");
  lift->add_option("--epsilon", lift_eps, "Exponent slack as a rational");
  lift->add_option("--seed", lift_seed, "Sampling seed for the census");
  add_common(lift, common, false);

  int cn = 2;
  std::int64_t cq = 1, cT = 1;
  std::string norm = "max", ball_eps = "1/5";
  auto* ball = app.add_subcommand("count-ball", "Count Gamma(q) elements in a norm ball");
  ball->add_option("--n", cn, "Rank")->required()->check(CLI::Range(2, 3));
  ball->add_option("--q", cq, "Level")->required()->check(CLI::PositiveNumber);
  ball->add_option("--T", cT, "Radius")->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--norm", norm, "max or frobenius")->check(CLI::IsMember({"max", "frobenius"}));
  ball->add_option("--epsilon", ball_eps, "Exponent slack of the reference shape");
  add_common(ball, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Size desk = Size::kDesk;
    if (verify->parsed()) {
      const Size sz = size_from_name(size);
      Reporter reporter(out);
      run_tasks(verify_tasks(suite, sz), common.jobs, resolve_budget(common, sz), reporter);
      return exit_code(reporter.overall());
    }
    if (klo->parsed()) return run_single(kloosterman_task(kf), resolve_budget(common, desk), out, err);
    if (bru->parsed()) return run_single(bruhat_task(matrix, bq, normalize), resolve_budget(common, desk), out, err);
    if (ind->parsed()) return run_single(indices_task(in, iq, exhaustive), resolve_budget(common, desk), out, err);
    if (gg->parsed()) return run_single(ggsum_task(gn, gp, twist, source), resolve_budget(common, desk), out, err);
    if (lift->parsed()) {
      if (!census && residues.empty()) throw PreconditionError("lift needs --g or --census");
      return run_single(lift_task(ln, lq, residues, lift_eps, census, lift_seed), resolve_budget(common, desk), out,
                        err);
    }
    if (ball->parsed())
      return run_single(count_ball_task(cn, cq, cT, norm, ball_eps), resolve_budget(common, desk), out, err);
    if (exp->parsed()) {
      if (out_path == "-") return run_single(experiment_task(kind, grid, out), resolve_budget(common, desk), err, err);
      std::ofstream csv(out_path, std::ios::binary);
      if (!csv) throw PreconditionError("cannot open " + out_path);
      Task t = experiment_task(kind, grid, csv);
      t.header.parameters["out"] = out_path;
      return run_single(t, resolve_budget(common, desk), out, err);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gammaq::cli
