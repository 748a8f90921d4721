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


#include <cstdlib>
#include <random>
#include <tuple>

#include "commands.hpp"

#include "gammaq/bruhat/decompose.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/ffchar/char_table.hpp"
#include "gammaq/ffchar/gelfand_graev.hpp"
#include "gammaq/ffchar/parabolic.hpp"
#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/enumerators.hpp"
#include "gammaq/kloosterman/laws.hpp"
#include "gammaq/kloosterman/sum.hpp"
#include "gammaq/latcount/ball.hpp"
#include "gammaq/latcount/det_one.hpp"
#include "gammaq/latcount/lift.hpp"

namespace gammaq::cli {

namespace {

using exactalg::ExactMatrix;
using exactalg::Integer;
using exactalg::PhaseSum;
using exactalg::Rational;
using exactalg::to_string;
using kloosterman::KloostermanQuery;

using Body = std::function<void(Record&, Budget&)>;

Task make(const std::string& suite, Size size, const std::string& check, const std::string& anchor,
          Json params, Body body) {
  Task t;
  t.header.command = "verify";
  t.header.parameters["suite"] = suite;
  t.header.parameters["size"] = size_name(size);
  t.header.parameters["check"] = check;
  for (auto& [k, v] : params.items()) t.header.parameters[k] = v;
  t.header.anchor = anchor;
  t.body = std::move(body);
  return t;
}

Status pass_if(bool ok) { return ok ? Status::kPass : Status::kFail; }

template <typename T>
T pick(Size size, T smoke, T desk, T extended) {
  return size == Size::kSmoke ? smoke : size == Size::kDesk ? desk : extended;
}

// --- groups ---------------------------------------------------------------

ExactMatrix elementary(int n, int i, int j, std::int64_t v) {
  ExactMatrix e = ExactMatrix::identity(static_cast<std::size_t>(n));
  e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(static_cast<long>(v));
  return e;
}

// A product of elementary matrices; entries are multiples of q off the diagonal.
ExactMatrix random_elementary_product(int n, std::int64_t q, int steps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> val(-2, 2);
  ExactMatrix g = ExactMatrix::identity(static_cast<std::size_t>(n));
  for (int s = 0; s < steps; ++s) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    g = g * elementary(n, i, j, q * val(rng));
  }
  return g;
}

void add_groups(std::vector<Task>& out, Size size) {
  const std::string suite = "groups";
  std::vector<std::pair<int, std::int64_t>> sl;
  for (std::int64_t q = 1; q <= pick<std::int64_t>(size, 3, 8, 12); ++q) sl.emplace_back(2, q);
  for (std::int64_t q = 1; q <= pick<std::int64_t>(size, 3, 4, 5); ++q) sl.emplace_back(3, q);
  if (size == Size::kExtended) sl.emplace_back(4, 2);
  for (auto [n, q] : sl) {
    out.push_back(make(suite, size, "sl-index", "sl-index-formula", {{"n", n}, {"q", q}},
                       [n = n, q = q](Record& r, Budget&) {
                         const Integer formula = groups::index_sl(n, q);
                         const Integer direct = groups::count_sl_mod_q(n, q);
                         r.payload["formula"] = to_string(formula);
                         r.payload["exhaustive"] = to_string(direct);
                         r.status = pass_if(formula == direct);
                       }));
  }
  const int max_n = pick(size, 3, 4, 4);
  const std::int64_t max_q = pick<std::int64_t>(size, 3, 5, 7);
  for (int n = 2; n <= max_n; ++n)
    for (std::int64_t q = 1; q <= max_q; ++q)
      out.push_back(make(suite, size, "unipotent-index", "unipotent-index-formula", {{"n", n}, {"q", q}},
                         [n, q](Record& r, Budget&) {
                           const Integer formula = groups::unipotent_index(n, q);
                           const Integer direct = groups::count_unipotent_cosets(n, q);
                           r.payload["formula"] = to_string(formula);
                           r.payload["coset_count"] = to_string(direct);
                           r.status = pass_if(formula == direct);
                         }));
  const int samples = pick(size, 20, 200, 2000);
  for (int n : {2, 3})
    for (std::int64_t q : {2, 3, 5, 6}) {
      const std::uint64_t seed = static_cast<std::uint64_t>(100 * n + q);
      Task t = make(suite, size, "conjugation", "congruence-conjugation", {{"n", n}, {"q", q}, {"samples", samples}},
                    [n, q, samples, seed](Record& r, Budget&) {
                      std::mt19937_64 rng(seed);
                      int bad = 0;
                      const groups::CongruenceSpec gamma{n, q, groups::Flavor::kGammaQ};
                      const groups::CongruenceSpec natural{n, q, groups::Flavor::kGammaQNatural};
                      for (int s = 0; s < samples; ++s) {
                        const ExactMatrix g = random_elementary_product(n, q, 3 * n, rng);
                        const ExactMatrix h = groups::conjugate_by_dq(g, q, groups::Direction::kToNatural);
                        const bool ok = groups::is_member(g, gamma) && groups::is_member(h, natural) &&
                                        groups::matches_natural_pattern(h, q) &&
                                        groups::conjugate_by_dq(h, q, groups::Direction::kToGamma) == g;
                        if (!ok) ++bad;
                      }
                      r.payload["failures"] = bad;
                      r.status = pass_if(bad == 0);
                    });
      t.header.seed = seed;
      out.push_back(std::move(t));
    }
}

// --- bruhat ---------------------------------------------------------------

void add_bruhat(std::vector<Task>& out, Size size) {
  const int samples = pick(size, 30, 300, 3000);
  for (int n : {2, 3, 4}) {
    const std::uint64_t seed = static_cast<std::uint64_t>(7 * n);
    Task t = make("bruhat", size, "decomposition", "bruhat-decomposition", {{"n", n}, {"samples", samples}},
                  [n, samples, seed](Record& r, Budget&) {
                    std::mt19937_64 rng(seed);
                    int bad = 0;
                    std::map<std::string, int> cells;
                    for (int s = 0; s < samples; ++s) {
                      const ExactMatrix g = random_elementary_product(n, 1, 4 * n, rng);
                      const auto d = bruhat::bruhat_decompose(g);
                      bool ok = d.recompose() == g && d.x.is_upper_unitriangular() && d.torus.is_diagonal() &&
                                d.y.is_upper_unitriangular() && bruhat::moduli_from_minors(g, d.w) == d.c;
                      for (int a = 0; a < n && ok; ++a)
                        for (int b = a + 1; b < n; ++b)
                          if (d.w.preimage(a) < d.w.preimage(b) &&
                              d.y(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) != 0)
                            ok = false;
                      if (!ok) ++bad;
                      ++cells[d.w.to_string()];
                    }
                    r.payload["failures"] = bad;
                    r.payload["cells_seen"] = cells.size();
                    r.status = pass_if(bad == 0);
                  });
    t.header.seed = seed;
    out.push_back(std::move(t));
  }
}

// --- kloosterman ----------------------------------------------------------

PhaseSum classical_direct(std::int64_t m, std::int64_t nn, std::int64_t c) {
  PhaseSum s;
  for (std::int64_t d = 0; d < c; ++d) {
    if (exactalg::gcd64(d, c) != 1) continue;
    const std::int64_t dbar = c == 1 ? 0 : exactalg::mod_inverse(d, c);
    s.add(exactalg::make_rational(m * d + nn * dbar, c));
  }
  return s;
}

KloostermanQuery query_of(int n, std::int64_t q, const std::string& w, std::vector<std::int64_t> c,
                          std::vector<std::int64_t> M, std::vector<std::int64_t> N) {
  return KloostermanQuery::make(n, q, bruhat::weyl_from_name(n, w), std::move(c), std::move(M), std::move(N));
}

std::vector<std::int64_t> ones(int n, std::int64_t first = 1) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n - 1), 1);
  v[0] = first;
  return v;
}

void add_trivial_weyl(std::vector<Task>& out, Size size) {
  const int max_n = pick(size, 3, 4, 4);
  const std::vector<std::int64_t> qs = size == Size::kSmoke ? std::vector<std::int64_t>{1, 2, 3}
                                                            : std::vector<std::int64_t>{1, 2, 3, 5, 6};
  for (int n = 2; n <= max_n; ++n)
    for (std::int64_t q : qs)
      out.push_back(make("kloosterman", size, "trivial-weyl", "trivial-weyl-sum", {{"n", n}, {"q", q}},
                         [n, q](Record& r, Budget& budget) {
                           // (M, N, c) triples; only the first has a nonzero sum.
                           const std::vector<std::tuple<std::vector<std::int64_t>, std::vector<std::int64_t>,
                                                        std::vector<std::int64_t>>>
                               cases = {{ones(n), ones(n), ones(n)},
                                        {ones(n, 2), ones(n, 2), ones(n)},
                                        {ones(n), ones(n, 2), ones(n)},
                                        {ones(n), ones(n), ones(n, 2)}};
                           Json rows = Json::array();
                           bool ok = true;
                           for (const auto& [M, N, c] : cases) {
                             const auto res = kloosterman::kloosterman_sum(query_of(n, q, "id", c, M, N), {}, budget);
                             const auto value = res.sum.integer_value();
                             const Integer expected = kloosterman::trivial_weyl_expected(n, q, M, N, c);
                             const bool hit = value && *value == expected;
                             ok = ok && hit;
                             rows.push_back({{"M", to_json(M)},
                                             {"N", to_json(N)},
                                             {"c", to_json(c)},
                                             {"value", value ? to_string(*value) : res.sum.to_string()},
                                             {"expected", to_string(expected)}});
                           }
                           r.payload["cases"] = rows;
                           r.status = pass_if(ok);
                         }));
}

void add_classical(std::vector<Task>& out, Size size) {
  const std::int64_t max_c = pick<std::int64_t>(size, 12, 50, 100);
  const std::int64_t max_mn = pick<std::int64_t>(size, 2, 4, 6);
  out.push_back(make("kloosterman", size, "classical", "classical-kloosterman",
                     {{"max_c", max_c}, {"max_mn", max_mn}}, [=](Record& r, Budget& budget) {
                       int checked = 0, bad = 0;
                       Json first_bad = nullptr;
                       for (std::int64_t c = 1; c <= max_c; ++c)
                         for (std::int64_t m = 1; m <= max_mn; ++m)
                           for (std::int64_t nn = 1; nn <= max_mn; ++nn) {
                             const auto res = kloosterman::kloosterman_sum(query_of(2, 1, "wl", {c}, {m}, {nn}), {}, budget);
                             ++checked;
                             if (!(res.sum == classical_direct(m, nn, c))) {
                               if (bad++ == 0) first_bad = {{"m", m}, {"n", nn}, {"c", c}};
                             }
                           }
                       r.payload["checked"] = checked;
                       r.payload["mismatches"] = bad;
                       r.payload["first_mismatch"] = first_bad;
                       r.status = pass_if(bad == 0);
                     }));
}

void add_divisibility(std::vector<Task>& out, Size size) {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid = {{2, pick<std::int64_t>(size, 8, 16, 16)}};
  if (size != Size::kSmoke) grid.emplace_back(3, pick<std::int64_t>(size, 9, 27, 81));
  for (auto [q, bound] : grid)
    for (std::string w : {"wstar", "w1", "w1inv"})
      out.push_back(make("kloosterman", size, "divisibility", "moduli-divisibility",
                         {{"n", 3}, {"q", q}, {"w", w}, {"max_c", bound}},
                         [q = q, bound = bound, w](Record& r, Budget& budget) {
                           int nonempty = 0, bad = 0, checked = 0;
                           Json counter = Json::array();
                           for (std::int64_t c1 = 1; c1 <= bound; ++c1)
                             for (std::int64_t c2 = 1; c2 <= bound; ++c2) {
                               const auto query = query_of(3, q, w, {c1, c2}, {1, 1}, {1, 1});
                               const auto verdict = kloosterman::divisibility_check(3, q, query.w, query.c);
                               ++checked;
                               const auto set = kloosterman::KloostermanSet::build(query, {}, budget);
                               if (set.size() == 0) continue;
                               ++nonempty;
                               if (!verdict.admissible) {
                                 ++bad;
                                 if (counter.size() < 5) counter.push_back({c1, c2});
                               }
                             }
                           r.payload["checked"] = checked;
                           r.payload["nonempty"] = nonempty;
                           r.payload["counterexamples"] = bad;
                           r.payload["examples"] = counter;
                           r.status = pass_if(bad == 0);
                         }));
}

void add_cab(std::vector<Task>& out, Size size) {
  std::vector<std::tuple<std::int64_t, int, int>> cases = {{2, 0, 0}, {2, 0, 1}, {2, 1, 0}};
  if (size != Size::kSmoke) {
    cases.emplace_back(2, 1, 1);
    cases.emplace_back(3, 0, 0);
    cases.emplace_back(3, 0, 1);
    cases.emplace_back(3, 1, 0);
  }
  if (size == Size::kExtended) cases.emplace_back(3, 1, 1);
  for (auto [p, alpha, beta] : cases)
    out.push_back(make("kloosterman", size, "cab-count", "kloosterman-set-count-bound",
                       {{"n", 3}, {"p", p}, {"alpha", alpha}, {"beta", beta}},
                       [p = p, alpha = alpha, beta = beta](Record& r, Budget& budget) {
                         const auto cab = kloosterman::cab_count_and_bound(3, p, alpha, beta, budget);
                         const kloosterman::WstarParams params{3, p, alpha, beta};
                         kloosterman::SetOptions grid;
                         grid.method = kloosterman::Method::kGridOracle;
                         const auto set = kloosterman::KloostermanSet::build(
                             query_of(3, p, "wstar", params.moduli(), {1, 1}, {1, 1}), grid, budget);
                         r.payload["moduli"] = to_json(params.moduli());
                         r.payload["lattice_count"] = to_string(cab.count);
                         r.payload["grid_count"] = set.size();
                         r.payload["grid_complete"] = set.complete();
                         r.payload["bound"] = to_string(cab.bound);
                         r.payload["bound_exponent"] = cab.bound_exponent;
                         r.payload["index_identity"] = cab.remark_identity;
                         const bool agree = set.complete() && cab.count == Integer(static_cast<unsigned long>(set.size()));
                         r.status = pass_if(agree && cab.within_bound() && cab.remark_identity);
                       }));
}

void add_support(std::vector<Task>& out, Size size) {
  const std::int64_t bound = pick<std::int64_t>(size, 16, 32, 64);
  out.push_back(make("kloosterman", size, "wstar-support", "wstar-support-and-size",
                     {{"n", 3}, {"q", 2}, {"max_c", bound}}, [bound](Record& r, Budget& budget) {
                       int in_support = 0, vanished = 0, bad = 0, chains = 0, nonempty_outside = 0;
                       Json counter = Json::array();
                       for (std::int64_t c1 = 1; c1 <= bound; ++c1)
                         for (std::int64_t c2 = 1; c2 <= bound; ++c2) {
                           const auto query = query_of(3, 2, "wstar", {c1, c2}, {1, 1}, {1, 1});
                           const auto support = kloosterman::wstar_support_check(3, 2, query.c);
                           bool ok = true;
                           if (support.form == kloosterman::SupportForm::kVanishes) {
                             const auto res = kloosterman::kloosterman_sum(query, {}, budget);
                             ok = res.sum.value_is_zero();
                             if (res.set_size > 0) ++nonempty_outside;
                             ++vanished;
                           } else {
                             const auto rep = kloosterman::thm32_bound_check(query, budget);
                             ok = rep.chain_holds;
                             ++in_support;
                             if (rep.chain_available) ++chains;
                           }
                           if (!ok) {
                             ++bad;
                             if (counter.size() < 5) counter.push_back({c1, c2});
                           }
                         }
                       r.payload["in_support"] = in_support;
                       r.payload["outside_support"] = vanished;
                       r.payload["nonempty_outside_support"] = nonempty_outside;
                       r.payload["chain_checked"] = chains;
                       r.payload["counterexamples"] = bad;
                       r.payload["examples"] = counter;
                       r.status = pass_if(bad == 0);
                     }));
}

std::vector<std::vector<std::int64_t>> coprime_vectors(int len, std::int64_t q, std::int64_t bound, bool one_mod_q) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : out)
      for (std::int64_t x = 1; x <= bound; ++x) {
        if (exactalg::gcd64(x, q) != 1) continue;
        if (one_mod_q && x % q != 1 % q) continue;
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

void add_crt(std::vector<Task>& out, Size size) {
  const std::int64_t bound = pick<std::int64_t>(size, 3, 5, 5);
  for (int n : {2, 3})
    for (std::int64_t q : {2, 3}) {
      out.push_back(make("kloosterman", size, "crt-literal", "crt-multiplicativity",
                         {{"n", n}, {"q", q}, {"max_c", bound}}, [n, q, bound](Record& r, Budget& budget) {
                           int checked = 0, bad = 0, nonzero = 0;
                           for (const auto& cp : coprime_vectors(n - 1, q, bound, false)) {
                             std::vector<std::int64_t> c;
                             for (auto x : cp) c.push_back(q * x);
                             const auto rep = kloosterman::crt_factor_check(
                                 query_of(n, q, "wl", c, std::vector<std::int64_t>(cp.size(), 1),
                                          std::vector<std::int64_t>(cp.size(), 1)),
                                 budget);
                             ++checked;
                             if (!rep.holds) ++bad;
                             if (!rep.left.value_is_zero()) ++nonzero;
                           }
                           r.payload["checked"] = checked;
                           r.payload["nonzero_left_sides"] = nonzero;
                           r.payload["mismatches"] = bad;
                           r.status = pass_if(bad == 0);
                         }));
      if (n == 3 && q == 3 && size == Size::kSmoke) continue;
      out.push_back(make("kloosterman", size, "crt-general", "crt-multiplicativity",
                         {{"n", n}, {"q", q}, {"max_b", bound}}, [n, q, bound](Record& r, Budget& budget) {
                           int checked = 0, bad = 0, nonzero = 0;
                           const std::int64_t qn = exactalg::ipow(q, static_cast<unsigned>(n));
                           for (const auto& b : coprime_vectors(n - 1, q, bound, true))
                             for (std::int64_t extra : {std::int64_t{1}, q}) {
                               if (n == 3 && extra > 1) continue;
                               std::vector<std::int64_t> c;
                               for (auto x : b) c.push_back(qn * extra * x);
                               for (std::int64_t m = 1; m <= 2; ++m) {
                                 std::vector<std::int64_t> M(b.size(), 1), N(b.size(), m);
                                 const auto rep = kloosterman::crt_factor_check_general(query_of(n, q, "wl", c, M, N), budget);
                                 ++checked;
                                 if (!rep.holds) ++bad;
                                 if (!rep.left.value_is_zero()) ++nonzero;
                               }
                             }
                           r.payload["checked"] = checked;
                           r.payload["nonzero_left_sides"] = nonzero;
                           r.payload["mismatches"] = bad;
                           r.status = pass_if(bad == 0);
                         }));
    }
}

void add_kloosterman(std::vector<Task>& out, Size size) {
  add_trivial_weyl(out, size);
  add_classical(out, size);
  add_divisibility(out, size);
  add_cab(out, size);
  add_support(out, size);
  add_crt(out, size);
}

// --- latcount -------------------------------------------------------------

// Counts gamma in Gamma(q) with max-norm <= T by scanning every entry over its
// residue class; n is 2 or 3.
std::uint64_t naive_ball(int n, std::int64_t q, std::int64_t T, Budget& budget) {
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<std::vector<std::int64_t>> choices(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    const bool diag = k % static_cast<std::size_t>(n + 1) == 0;
    for (std::int64_t x = -T; x <= T; ++x)
      if (exactalg::mod_floor(x - (diag ? 1 : 0), q) == 0) choices[k].push_back(x);
  }
  std::vector<std::size_t> idx(cells, 0);
  std::uint64_t count = 0;
  latcount::IntMatrix a(cells);
  while (true) {
    budget.charge();
    for (std::size_t k = 0; k < cells; ++k) a[k] = choices[k][idx[k]];
    const std::int64_t det = n == 2 ? a[0] * a[3] - a[1] * a[2]
                                    : a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                                          a[2] * (a[3] * a[7] - a[4] * a[6]);
    if (det == 1) ++count;
    std::size_t k = 0;
    while (k < cells && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

void add_latcount(std::vector<Task>& out, Size size) {
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> balls;
  for (std::int64_t q : {1, 2, 3})
    for (std::int64_t T = 1; T <= pick<std::int64_t>(size, 6, 20, 20); ++T) balls.emplace_back(2, q, T);
  for (std::int64_t T = 1; T <= pick<std::int64_t>(size, 2, 3, 4); ++T) balls.emplace_back(3, 2, T);
  if (size != Size::kSmoke)
    for (std::int64_t T = 1; T <= pick<std::int64_t>(size, 3, 4, 6); ++T) balls.emplace_back(3, 3, T);
  for (auto [n, q, T] : balls)
    out.push_back(make("latcount", size, "ball-count", "ball-count", {{"n", n}, {"q", q}, {"T", T}},
                       [n = n, q = q, T = T](Record& r, Budget& budget) {
                         const auto rep = latcount::count_ball(n, q, T, budget);
                         const std::uint64_t naive = naive_ball(n, q, T, budget);
                         r.payload["count"] = to_string(rep.count);
                         r.payload["naive"] = naive;
                         r.payload["ratio"] = rep.ratio.get_d();
                         r.status = pass_if(rep.count == Integer(static_cast<unsigned long>(naive)));
                       }));
  for (std::int64_t q = 2; q <= pick<std::int64_t>(size, 5, 13, 17); ++q)
    out.push_back(make("latcount", size, "lift-census", "optimal-lifting", {{"n", 2}, {"q", q}, {"epsilon", "1/5"}},
                       [q](Record& r, Budget& budget) {
                         const auto rep = latcount::lifting_census(2, q, {}, budget);
                         int not_minimal = 0;
                         for (const auto& e : rep.classes)
                           if (e.norm > 1 && latcount::DetOneBox(2, q, e.residues, e.norm - 1).count(budget) != 0)
                             ++not_minimal;
                         r.payload["classes"] = rep.classes.size();
                         r.payload["total"] = to_string(rep.total);
                         r.payload["max_norm"] = rep.max_norm;
                         r.payload["threshold"] = rep.threshold;
                         r.payload["failure_count"] = rep.failure_count;
                         r.payload["failure_fraction"] = rep.failure_fraction();
                         r.payload["not_minimal"] = not_minimal;
                         if (not_minimal > 0 || rep.sampled)
                           r.status = Status::kFail;
                         else
                           r.status = rep.failure_count > 0 ? Status::kWarn : Status::kPass;
                       }));
}

// --- ffchar ---------------------------------------------------------------

std::vector<std::vector<std::int64_t>> twists(int n, int p) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : out)
      for (std::int64_t a = 1; a < p; ++a) {
        auto w = v;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

void add_ffchar(std::vector<Task>& out, Size size) {
  std::vector<std::pair<int, int>> groups = {{2, 2}, {2, 3}, {3, 2}};
  if (size != Size::kSmoke) {
    groups.emplace_back(2, 5);
    groups.emplace_back(2, 7);
    groups.emplace_back(3, 3);
  }
  for (auto [n, p] : groups)
    out.push_back(make("ffchar", size, "gelfand-graev", "gelfand-graev-average", {{"n", n}, {"p", p}},
                       [n = n, p = p](Record& r, Budget& budget) {
                         const auto table = ffchar::character_table_oracle(n, p, budget);
                         std::size_t cuspidals = 0;
                         bool dims_ok = true;
                         const Integer dim = ffchar::cuspidal_dim(n, p);
                         for (std::size_t a = 0; a < table.size(); ++a) {
                           if (!table.cuspidal[a]) continue;
                           ++cuspidals;
                           dims_ok = dims_ok && Integer(static_cast<long>(table.degrees[a])) == dim;
                         }
                         const std::int64_t pp = p;
                         const std::int64_t expected_cuspidals =
                             n == 2 ? (pp * pp - pp) / 2 : (pp * pp * pp - pp) / 3;
                         const auto chi = ffchar::cuspidal_unipotent_char(table);
                         bool gg_ok = true;
                         int twist_count = 0;
                         for (const auto& a : twists(n, p)) {
                           const auto rep = ffchar::gg_sum(chi, budget, a);
                           gg_ok = gg_ok && rep.rational && rep.sum_value == 1;
                           ++twist_count;
                         }
                         ffchar::UnipotentClassFunction trivial{n, p, {}};
                         for (const auto& part : ffchar::partitions(n)) trivial.values[part] = 1;
                         const auto triv = ffchar::gg_sum(trivial, budget);
                         const bool triv_ok = triv.rational && triv.sum_value == 0;
                         r.payload["group_order"] = table.group_order;
                         r.payload["classes"] = table.classes.size();
                         r.payload["orthogonality"] = table.first_orthogonality && table.second_orthogonality;
                         r.payload["cuspidals"] = cuspidals;
                         r.payload["cuspidal_dim"] = to_string(dim);
                         r.payload["twists"] = twist_count;
                         r.payload["gg_sum"] = gg_ok ? "1" : "mismatch";
                         r.payload["trivial_gg_sum"] = triv.rational ? to_string(triv.sum_value) : "irrational";
                         r.status = pass_if(table.first_orthogonality && table.second_orthogonality && dims_ok &&
                                            static_cast<std::int64_t>(cuspidals) == expected_cuspidals && gg_ok &&
                                            triv_ok);
                       }));
  for (int p : {2, 3})
    for (const std::vector<int>& parts : std::vector<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}})
      out.push_back(make("ffchar", size, "parabolic-count", "parabolic-fixed-dimension",
                         {{"n", 3}, {"p", p}, {"parts", ffchar::partition_to_string(parts)}},
                         [p, parts](Record& r, Budget& budget) {
                           const Integer formula =
                               ffchar::parabolic_dim_count(3, parts, p, std::vector<std::int64_t>(parts.size(), 1));
                           const Integer orbits = ffchar::flag_count_by_orbits(3, parts, p, budget);
                           const auto display = ffchar::power_display(3, parts, p);
                           r.payload["formula"] = to_string(formula);
                           r.payload["orbits"] = to_string(orbits);
                           r.payload["power_display"] = to_string(display.power);
                           r.payload["display_ratio"] = to_string(display.ratio);
                           r.status = pass_if(formula == orbits);
                         }));
}

}  // namespace

Size size_from_name(const std::string& name) {
  if (name == "smoke") return Size::kSmoke;
  if (name == "desk") return Size::kDesk;
  if (name == "extended") return Size::kExtended;
  throw PreconditionError("unknown size: " + name);
}

std::string size_name(Size size) {
  switch (size) {
    case Size::kSmoke:
      return "smoke";
    case Size::kDesk:
      return "desk";
    case Size::kExtended:
      return "extended";
  }
  return "desk";
}

std::uint64_t default_budget(Size size) {
  if (const char* env = std::getenv("GAMMAQ_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("GAMMAQ_BUDGET is not a number: ") + env);
    }
  }
  return pick<std::uint64_t>(size, 1'000'000ULL, 100'000'000ULL, 1'000'000'000ULL);
}

std::vector<Task> verify_tasks(const std::string& suite, Size size) {
  std::vector<Task> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "groups") known = true, add_groups(out, size);
  if (all || suite == "bruhat") known = true, add_bruhat(out, size);
  if (all || suite == "kloosterman") known = true, add_kloosterman(out, size);
  if (all || suite == "latcount") known = true, add_latcount(out, size);
  if (all || suite == "ffchar") known = true, add_ffchar(out, size);
  if (!known) throw PreconditionError("unknown suite: " + suite);
  return out;
}

}  // namespace gammaq::cli
