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


#include "gammaq/kloosterman/laws.hpp"

#include <algorithm>

#include "gammaq/bruhat/compatibility.hpp"
#include "gammaq/exactalg/numtheory.hpp"
#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {

namespace {

using exactalg::crt_split;
using exactalg::gcd64;
using exactalg::valuation;

// q^k | x, decided prime by prime.
bool power_divides(std::int64_t q, int k, std::int64_t x) {
  for (auto p : exactalg::prime_divisors(q))
    if (valuation(x, p) < k * valuation(q, p)) return false;
  return true;
}

// Residue of a rational with denominator coprime to m.
std::int64_t residue(const Rational& r, std::int64_t m) {
  if (m == 1) return 0;
  const Integer num = r.get_num() % Integer(static_cast<long>(m));
  const std::int64_t den = exactalg::to_int64(Integer(r.get_den() % Integer(static_cast<long>(m))));
  const std::int64_t nr = exactalg::mod_floor(exactalg::to_int64(num), m);
  return exactalg::mul_mod(nr, exactalg::mod_inverse(den, m), m);
}

// N_{n-i} scaled by d*_{w^{-1}(i+1)} / d*_{w^{-1}(i)}, i = 1..n-1, modulo m.
std::vector<std::int64_t> twist_n(const WeylElement& w, const std::vector<std::int64_t>& N,
                                  const std::vector<std::int64_t>& d, std::int64_t m) {
  const int n = w.n();
  KloostermanQuery torus;
  torus.n = n;
  torus.c = d;
  const auto ds = torus.cstar();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    const Rational t = ds[static_cast<std::size_t>(w.preimage(i))] / ds[static_cast<std::size_t>(w.preimage(i - 1))];
    const auto k = static_cast<std::size_t>(n - i - 1);
    out[k] = exactalg::mul_mod(exactalg::mod_floor(N[k], m), residue(t, m), m);
  }
  return out;
}

bool has_corner_shape(const WeylElement& w) { return w.image(0) == w.n() - 1 && w.image(w.n() - 1) == 0; }

Integer product(const std::vector<std::int64_t>& v) {
  Integer p = 1;
  for (auto x : v) p *= Integer(static_cast<long>(x));
  return p;
}

std::int64_t product64(const std::vector<std::int64_t>& v) {
  return exactalg::to_int64(product(v));
}

void finish(CrtReport& r, const KloostermanResult& left, const KloostermanResult& rq,
            const KloostermanResult& r1) {
  r.left = left.sum;
  r.right_q = rq.sum;
  r.right_one = r1.sum;
  r.left_size = left.set_size;
  r.right_q_size = rq.set_size;
  r.right_one_size = r1.set_size;
  r.sizes_multiply = r.left_size == r.right_q_size * r.right_one_size;
  r.holds = r.left.value_equals(r.right_q.product(r.right_one));
}

}  // namespace

Integer trivial_weyl_expected(int n, std::int64_t q, const std::vector<std::int64_t>& M,
                              const std::vector<std::int64_t>& N, const std::vector<std::int64_t>& c) {
  const bool unit = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 1; });
  if (!unit || M != N) return 0;
  return groups::unipotent_index(n, q);
}

std::string divisibility_case_name(DivisibilityCase c) {
  switch (c) {
    case DivisibilityCase::kIdentity: return "identity";
    case DivisibilityCase::kGeneric: return "generic";
    case DivisibilityCase::kVoronoi: return "voronoi";
    case DivisibilityCase::kVoronoiOffForm: return "voronoi_off_form";
    case DivisibilityCase::kWStar: return "wstar";
    case DivisibilityCase::kNotBlockShape: return "not_block_shape";
  }
  return "unknown";
}

DivisibilityVerdict divisibility_check(int n, std::int64_t q, const WeylElement& w,
                                       const std::vector<std::int64_t>& c) {
  require(w.n() == n && c.size() == static_cast<std::size_t>(n - 1), "dimension mismatch");
  for (auto x : c) require(x >= 1, "moduli must be positive");
  DivisibilityVerdict v;
  if (!w.block_type()) {
    v.which = DivisibilityCase::kNotBlockShape;
    v.admissible = v.strict_admissible = false;
    v.reason = "w is not of block shape";
    return v;
  }
  const auto kind = bruhat::classify(w);
  if (kind == bruhat::WeylKind::kIdentity) {
    v.which = DivisibilityCase::kIdentity;
    v.admissible = v.strict_admissible = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 1; });
    v.reason = "identity needs c = (1, ..., 1)";
    return v;
  }
  if (kind == bruhat::WeylKind::kWStar) {
    v.which = DivisibilityCase::kWStar;
    v.admissible = std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return power_divides(q, n, x); });
    v.strict_admissible = v.admissible;
    v.reason = "w_* needs q^n | c_j for all j";
    return v;
  }
  if (kind == bruhat::WeylKind::kVoronoiW1) {
    // c = (m g^{n-1}, g^{n-2}, ..., g) with (m, q) = 1.
    const std::int64_t g = c.back();
    bool form = true;
    Integer gp = 1;
    for (int j = n - 1; j >= 2; --j) {
      if (Integer(static_cast<long>(c[static_cast<std::size_t>(j - 1)])) != gp * g) form = false;
      gp *= g;
    }
    gp *= g;  // g^{n-1}
    const Integer c1(static_cast<long>(c[0]));
    if (form && c1 % gp != 0) form = false;
    if (form) {
      const Integer m = c1 / gp;
      if (gcd64(exactalg::to_int64(m % Integer(static_cast<long>(q))), q) != 1 && q > 1) form = false;
    }
    if (!form) {
      v.which = DivisibilityCase::kVoronoiOffForm;
      v.reason = "w_1 with c not of the form (m g^{n-1}, ..., g)";
      return v;
    }
    v.which = DivisibilityCase::kVoronoi;
    for (auto p : exactalg::prime_divisors(q)) {
      const int vg = valuation(g, p), vq = valuation(q, p);
      if ((n - 1) * vg < (n + 1) * vq) v.admissible = false;
      if ((n - 1) * (n - 2) * vg < ((n + 1) * (n - 2) + 2) * vq) v.strict_admissible = false;
    }
    v.reason = "w_1 needs q^{n+1} | g^{n-1}";
    return v;
  }
  v.which = DivisibilityCase::kGeneric;
  v.admissible = std::any_of(c.begin(), c.end(), [&](std::int64_t x) { return power_divides(q, n + 1, x); });
  const int strict = std::min(n + 2, 2 * n - 2);
  v.strict_admissible = std::any_of(c.begin(), c.end(), [&](std::int64_t x) { return power_divides(q, strict, x); });
  v.reason = "generic w needs q^{n+1} | c_j for some j";
  return v;
}

std::string support_form_name(SupportForm f) {
  switch (f) {
    case SupportForm::kVanishes: return "vanishes";
    case SupportForm::kFormOne: return "form_one";
    case SupportForm::kFormTwo: return "form_two";
  }
  return "unknown";
}

SupportVerdict wstar_support_check(int n, std::int64_t q, const std::vector<std::int64_t>& c) {
  require(n >= 2 && c.size() == static_cast<std::size_t>(n - 1), "c must have n-1 entries");
  for (auto x : c) require(x >= 1, "moduli must be positive");
  const Integer qn = exactalg::pow_integer(Integer(static_cast<long>(q)), static_cast<unsigned long>(n));
  // Geometric progression starting at c[first] and moving by step.
  auto progression = [&](const std::vector<std::int64_t>& seq, std::int64_t& r, std::int64_t& s) {
    const Integer c0(static_cast<long>(seq[0]));
    if (c0 % qn != 0) return false;
    r = exactalg::to_int64(Integer(c0 / qn));
    s = 1;
    if (seq.size() >= 2) {
      if (seq[1] % seq[0] != 0) return false;
      s = seq[1] / seq[0];
    }
    Integer expect = c0;
    for (std::size_t j = 1; j < seq.size(); ++j) {
      expect *= s;
      if (Integer(static_cast<long>(seq[j])) != expect) return false;
    }
    return true;
  };
  SupportVerdict v;
  std::int64_t r1 = 0, s1 = 0, r2 = 0, s2 = 0;
  const bool one = progression(c, r1, s1);
  std::vector<std::int64_t> rev(c.rbegin(), c.rend());
  const bool two = progression(rev, r2, s2);
  if (one) {
    v.form = SupportForm::kFormOne;
    v.r = r1;
    v.s = s1;
  } else if (two) {
    v.form = SupportForm::kFormTwo;
    v.r = r2;
    v.s = s2;
  }
  v.both = one && two;
  return v;
}

int cab_exponent(int n, int alpha, int beta) {
  return (n * n * n + 3 * n * n - 10 * n + 6) / 6 + 2 * alpha * (n - 1) + (n - 1) * (n - 2) * beta;
}

Integer cab_bound(int n, std::int64_t p, int alpha, int beta) {
  return 2 * exactalg::pow_integer(Integer(static_cast<long>(p)), static_cast<unsigned long>(cab_exponent(n, alpha, beta)));
}

CabCount cab_count_and_bound(int n, std::int64_t p, int alpha, int beta, Budget& budget) {
  require(n >= 3, "the coordinate lattice needs n >= 3");
  require(exactalg::is_prime(p), "p must be prime");
  require(alpha >= 0 && beta >= 0, "alpha and beta must be non-negative");
  CabCount r;
  r.n = n;
  r.p = p;
  r.alpha = alpha;
  r.beta = beta;
  r.bound_exponent = cab_exponent(n, alpha, beta);
  r.bound = cab_bound(n, p, alpha, beta);
  std::uint64_t count = 0;
  enumerate_wstar_lattice(WstarParams{n, p, alpha, beta}, budget,
                          [&](const std::vector<Rational>&, const std::vector<Rational>&) { ++count; });
  r.count = Integer(static_cast<unsigned long>(count));
  const Integer P(static_cast<long>(p));
  r.remark_identity = groups::unipotent_index(n, p) * exactalg::pow_integer(P, static_cast<unsigned long>((n - 1) * (n - 1))) ==
                      exactalg::pow_integer(P, static_cast<unsigned long>(cab_exponent(n, 0, 0)));
  return r;
}

Thm32Report thm32_bound_check(const KloostermanQuery& query, Budget& budget) {
  query.validate();
  require(exactalg::is_squarefree(query.q), "the size bound needs squarefree q");
  require(bruhat::classify(query.w) == bruhat::WeylKind::kWStar, "the size bound is for w = w_*");
  const int n = query.n;
  const std::int64_t q = query.q;
  Thm32Report r;
  r.support = wstar_support_check(n, q, query.c);
  const KloostermanSet set = KloostermanSet::build(query, {}, budget);
  r.set_size = set.size();
  if (bruhat::compatibility(query.w, query.M, query.N, query.v, query.c)) r.sum = sum_over_set(set, query);
  r.abs_value = r.sum.evaluate(12).abs_approx;
  const double tol = 1e-6;
  bool chain = r.abs_value <= static_cast<double>(r.set_size) + tol;

  if (r.support.form != SupportForm::kVanishes && exactalg::is_prime(q)) {
    for (auto x : query.c) {
      const auto [a, b] = crt_split(x, q);
      r.a.push_back(a);
      r.b.push_back(b);
    }
    r.alpha = valuation(r.support.r, q);
    r.beta = valuation(r.support.s, q);
    auto qa = query;
    qa.c = r.a;
    r.a_set_size = KloostermanSet::build(qa, {}, budget).size();
    auto qb = query;
    qb.q = 1;
    qb.c = r.b;
    r.b_set_size = KloostermanSet::build(qb, {}, budget).size();
    r.sizes_multiply = r.set_size == r.a_set_size * r.b_set_size;
    const Integer cab = cab_bound(n, q, r.alpha, r.beta);
    r.chain_bound = cab * Integer(static_cast<unsigned long>(r.b_set_size));
    r.chain_available = true;
    chain = chain && r.sizes_multiply && Integer(static_cast<unsigned long>(r.a_set_size)) <= cab &&
            Integer(static_cast<unsigned long>(r.set_size)) <= r.chain_bound;
  }
  r.chain_holds = chain;

  if (r.support.form != SupportForm::kVanishes) {
    const Integer prod = product(query.c);
    const Integer qq(static_cast<long>(q));
    const Integer reduced = prod / exactalg::pow_integer(qq, static_cast<unsigned long>(n * (n - 1)));
    // (reduced, q^inf)
    Integer part = 1, rest = reduced;
    for (auto p : exactalg::prime_divisors(q))
      while (rest % p == 0) {
        rest /= p;
        part *= p;
      }
    const Rational ref = Rational(groups::unipotent_index(n, q) * prod * part) /
                         Rational(exactalg::pow_integer(qq, static_cast<unsigned long>(n - 1)));
    r.reference_ratio = r.abs_value / ref.get_d();
  }
  return r;
}

CrtReport crt_factor_check(const KloostermanQuery& query, Budget& budget) {
  query.validate();
  const int n = query.n;
  const std::int64_t q = query.q;
  require(has_corner_shape(query.w), "hypothesis w(1) = n and w(n) = 1 fails");
  std::vector<std::int64_t> cp;
  for (auto x : query.c) {
    require(x % q == 0, "hypothesis c = q c' fails");
    cp.push_back(x / q);
  }
  require(gcd64(product64(cp) % q, q) == 1 || q == 1, "hypothesis (c'_1 ... c'_{n-1}, q) = 1 fails");
  CrtReport r;
  r.a.assign(static_cast<std::size_t>(n - 1), q);
  r.b = cp;
  // c'_k with c'_0 = c'_n = 1, 1-based.
  auto cc = [&](int k) -> std::int64_t { return (k <= 0 || k >= n) ? 1 : cp[static_cast<std::size_t>(k - 1)]; };
  auto w1 = [&](int i) { return query.w.image(i - 1) + 1; };
  r.n_twisted.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    const auto k = static_cast<std::size_t>(n - i - 1);
    if (q == 1) {
      r.n_twisted[k] = 0;
      continue;
    }
    const std::int64_t num = exactalg::mul_mod(cc(n - w1(i)) % q, cc(n - w1(i + 1) + 1) % q, q);
    const std::int64_t den = exactalg::mul_mod(cc(n - w1(i) + 1) % q, cc(n - w1(i + 1)) % q, q);
    r.n_twisted[k] = exactalg::mul_mod(exactalg::mod_floor(query.N[k], q),
                                       exactalg::mul_mod(num, exactalg::mod_inverse(den, q), q), q);
  }
  const std::int64_t mb = exactalg::to_int64(Integer(product(cp) * product(cp)));
  r.n_level_one = query.N;
  if (mb > 1) {
    const std::int64_t qbar = exactalg::mod_inverse(q % mb, mb);
    r.n_level_one.front() = exactalg::mul_mod(exactalg::mod_floor(query.N.front(), mb), qbar, mb);
    if (n > 2) r.n_level_one.back() = exactalg::mul_mod(exactalg::mod_floor(query.N.back(), mb), qbar, mb);
  }
  const auto left = kloosterman_sum(query, {}, budget);
  auto qa = query;
  qa.c = r.a;
  qa.N = r.n_twisted;
  auto qb = query;
  qb.q = 1;
  qb.c = r.b;
  qb.N = r.n_level_one;
  finish(r, left, kloosterman_sum(qa, {}, budget), kloosterman_sum(qb, {}, budget));
  return r;
}

CrtReport crt_factor_check_general(const KloostermanQuery& query, Budget& budget) {
  query.validate();
  const std::int64_t q = query.q;
  require(has_corner_shape(query.w), "hypothesis w(1) = n and w(n) = 1 fails");
  CrtReport r;
  for (auto x : query.c) {
    const auto [a, b] = crt_split(x, q);
    require(b % q == 1 % q, "hypothesis b_j = 1 mod q fails");
    r.a.push_back(a);
    r.b.push_back(b);
  }
  const std::int64_t ma = exactalg::to_int64(
      Integer(product(r.a) * exactalg::pow_integer(Integer(static_cast<long>(q)), static_cast<unsigned long>(query.n))));
  const std::int64_t mb = exactalg::to_int64(Integer(product(r.b) * product(r.b)));
  r.n_twisted = twist_n(query.w, query.N, r.b, ma);
  r.n_level_one = twist_n(query.w, query.N, r.a, mb);
  const auto left = kloosterman_sum(query, {}, budget);
  auto qa = query;
  qa.c = r.a;
  qa.N = r.n_twisted;
  auto qb = query;
  qb.q = 1;
  qb.c = r.b;
  qb.N = r.n_level_one;
  finish(r, left, kloosterman_sum(qa, {}, budget), kloosterman_sum(qb, {}, budget));
  return r;
}

}  // namespace gammaq::kloosterman
