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

#include "gammaq/bruhat/weyl.hpp"
#include "gammaq/groups/congruence.hpp"
#include "gammaq/kloosterman/enumerators.hpp"

namespace gammaq::kloosterman {
namespace {

using exactalg::in_coset;
using exactalg::mod_rational;

class EchelonSearch {
 public:
  EchelonSearch(int n, std::int64_t q, const std::vector<Rational>& torus, const WeylElement& w,
                Budget& budget, const RepVisitor& visit)
      : n_(n), w_(w), budget_(budget), visit_(visit), pattern_(bruhat::u_w_pattern(w)),
        ts_(n), X_(n * n), Y_(n * n), K_(n * n), cells_(n * n) {
    require(static_cast<int>(torus.size()) == n && w.n() == n, "echelon: dimension mismatch");
    for (int i = 0; i < n; ++i) {
      require(torus[i] != 0, "echelon: singular torus");
      ts_[i] = torus[i] * w.sign(i);
      X_[i * n + i] = 1;
      Y_[i * n + i] = 1;
    }
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) cells_[i * n + k] = groups::natural_cell(i, k, q);
  }

  void run() { step(n_ - 1, 0); }

 private:
  // Sum over j > r of x_{rj} K_j[b].
  Rational partial(int r, int b, int skip) const {
    Rational s = 0;
    for (int j = r + 1; j < n_; ++j) {
      if (j == skip) continue;
      const Rational& k = K_[j * n_ + b];
      if (k != 0 && X_[r * n_ + j] != 0) s += X_[r * n_ + j] * k;
    }
    return s;
  }

  template <typename F>
  void progression(const Rational& coef, const Rational& known, const groups::CellLattice& cell, F&& f) {
    const Rational step = abs(cell.modulus / coef);
    Rational u = mod_rational((cell.offset - known) / coef, step);
    for (; u < 1; u += step) f(u);
  }

  void step(int r, int b) {
    if (r < 0) {
      emit();
      return;
    }
    if (b == n_) {
      const int wr = w_.image(r);
      for (int k = 0; k < n_; ++k) K_[r * n_ + k] = ts_[r] * Y_[wr * n_ + k];
      step(r - 1, 0);
      return;
    }
    budget_.charge();
    const int wr = w_.image(r);
    const int j0 = w_.preimage(b);
    const auto& cell = cells_[r * n_ + b];
    if (j0 > r) {
      const Rational known = partial(r, b, j0);
      progression(K_[j0 * n_ + b], known, cell, [&](const Rational& u) {
        X_[r * n_ + j0] = u;
        step(r, b + 1);
      });
      X_[r * n_ + j0] = 0;
    } else if (b > wr && pattern_.contains(wr, b)) {
      const Rational known = partial(r, b, -1);
      progression(ts_[r], known, cell, [&](const Rational& u) {
        Y_[wr * n_ + b] = u;
        step(r, b + 1);
      });
      Y_[wr * n_ + b] = 0;
    } else {
      Rational value = partial(r, b, -1);
      if (b == wr) value += ts_[r];
      if (in_coset(value, cell.offset, cell.modulus)) step(r, b + 1);
    }
  }

  void emit() {
    std::vector<Rational> x, y(pattern_.size());
    x.reserve(n_ * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) x.push_back(X_[i * n_ + j]);
    for (std::size_t k = 0; k < pattern_.size(); ++k) {
      const auto [a, b] = pattern_.positions()[k];
      y[k] = Y_[a * n_ + b];
    }
    visit_(x, y);
  }

  int n_;
  const WeylElement& w_;
  Budget& budget_;
  const RepVisitor& visit_;
  exactalg::UnipotentPattern pattern_;
  std::vector<Rational> ts_, X_, Y_, K_;
  std::vector<groups::CellLattice> cells_;
};

}  // namespace

void enumerate_echelon(int n, std::int64_t q, const std::vector<Rational>& torus, const WeylElement& w,
                       Budget& budget, const RepVisitor& visit) {
  require(q >= 1, "level must be positive");
  EchelonSearch(n, q, torus, w, budget, visit).run();
}

void enumerate_echelon(const KloostermanQuery& query, Budget& budget, const RepVisitor& visit) {
  query.validate();
  enumerate_echelon(query.n, query.q, query.cstar(), query.w, budget, visit);
}

}  // namespace gammaq::kloosterman
