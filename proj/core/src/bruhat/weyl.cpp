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

#include <algorithm>
#include <sstream>

#include "gammaq/errors.hpp"

namespace gammaq::bruhat {
namespace {

int parity_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    require(perm[i] >= 0 && static_cast<std::size_t>(perm[i]) < perm.size() && inv[perm[i]] == -1,
            "not a permutation");
    inv[perm[i]] = static_cast<int>(i);
  }
  return inv;
}

}  // namespace

WeylElement WeylElement::from_permutation(std::vector<int> perm) {
  require(!perm.empty(), "empty permutation");
  WeylElement w;
  w.inv_ = invert(perm);
  w.perm_ = std::move(perm);
  w.sign_.assign(w.perm_.size(), 1);
  w.sign_[0] = parity_sign(w.perm_);
  return w;
}

WeylElement WeylElement::from_matrix(const ExactMatrix& m) {
  const int n = static_cast<int>(m.size());
  WeylElement w;
  w.perm_.assign(n, -1);
  w.sign_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = m(i, j);
      if (v == 0) continue;
      require((v == 1 || v == -1) && w.perm_[i] == -1, "not a signed permutation matrix");
      w.perm_[i] = j;
      w.sign_[i] = v == 1 ? 1 : -1;
    }
  w.inv_ = invert(w.perm_);
  int det = parity_sign(w.perm_);
  for (int s : w.sign_) det *= s;
  require(det == 1, "Weyl representative must have determinant +1");
  return w;
}

std::optional<int> WeylElement::sign_row() const {
  for (int i = 0; i < n(); ++i)
    if (sign_[i] < 0) return i;
  return std::nullopt;
}

ExactMatrix WeylElement::to_matrix() const {
  ExactMatrix m(perm_.size());
  for (int i = 0; i < n(); ++i) m(i, perm_[i]) = sign_[i];
  return m;
}

WeylElement WeylElement::inverse() const { return from_matrix(to_matrix().transpose()); }

bool WeylElement::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::optional<std::vector<int>> WeylElement::block_type() const {
  std::vector<int> d;
  int start = 0;
  for (int i = 1; i <= n(); ++i) {
    if (i == n() || perm_[i] != perm_[i - 1] + 1) {
      d.push_back(i - start);
      start = i;
    }
  }
  // Rebuild the block anti-diagonal permutation and compare.
  int row = 0, right = n();
  for (int size : d) {
    right -= size;
    for (int t = 0; t < size; ++t)
      if (perm_[row + t] != right + t) return std::nullopt;
    row += size;
  }
  return d;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (i) os << ',';
    if (sign_[i] < 0) os << '-';
    os << perm_[i] + 1;
  }
  return os.str();
}

WeylElement special_weyl(int n, WeylKind kind) {
  require(n >= 2, "Weyl elements need n >= 2");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  switch (kind) {
    case WeylKind::kIdentity:
      break;
    case WeylKind::kWStar:
      std::swap(perm[0], perm[n - 1]);
      break;
    case WeylKind::kWLong:
      for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
      break;
    case WeylKind::kVoronoiW1:
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      break;
  }
  return WeylElement::from_permutation(std::move(perm));
}

WeylElement weyl_from_name(int n, const std::string& name) {
  if (name == "id" || name == "identity") return special_weyl(n, WeylKind::kIdentity);
  if (name == "wstar" || name == "w_star") return special_weyl(n, WeylKind::kWStar);
  if (name == "wl" || name == "wlong" || name == "w_long") return special_weyl(n, WeylKind::kWLong);
  if (name == "w1" || name == "voronoi") return special_weyl(n, WeylKind::kVoronoiW1);
  if (name == "w1inv") return special_weyl(n, WeylKind::kVoronoiW1).inverse();
  std::vector<int> perm;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      perm.push_back(std::stoi(tok) - 1);
    } catch (const std::exception&) {
      throw PreconditionError("unknown Weyl element: " + name);
    }
  }
  require(static_cast<int>(perm.size()) == n, "Weyl permutation has the wrong length");
  return WeylElement::from_permutation(std::move(perm));
}

std::optional<WeylKind> classify(const WeylElement& w) {
  for (WeylKind k : {WeylKind::kIdentity, WeylKind::kWStar, WeylKind::kVoronoiW1, WeylKind::kWLong})
    if (special_weyl(w.n(), k).permutation() == w.permutation()) return k;
  return std::nullopt;
}

UnipotentPattern u_w_pattern(const WeylElement& w) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (int a = 0; a < w.n(); ++a)
    for (int b = a + 1; b < w.n(); ++b)
      if (w.preimage(a) > w.preimage(b)) pos.emplace_back(a, b);
  return UnipotentPattern(static_cast<std::size_t>(w.n()), std::move(pos));
}

}  // namespace gammaq::bruhat
