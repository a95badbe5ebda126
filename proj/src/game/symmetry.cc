// Copyright 2026 The HintGuess Authors. All rights reserved.
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

#include "hintguess/game/symmetry.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hintguess {

Symmetry IdentitySymmetry(const FeatureSpaces& spaces) {
  Symmetry s;
  for (const auto& d : spaces.domains()) {
    std::vector<int> p(d.size());
    std::iota(p.begin(), p.end(), 0);
    s.permutations.push_back(std::move(p));
  }
  return s;
}

void ValidateSymmetry(const FeatureSpaces& spaces, const Symmetry& symmetry) {
  if (static_cast<int>(symmetry.permutations.size()) != spaces.num_features()) {
    throw std::invalid_argument("symmetry needs one permutation per feature space");
  }
  for (int k = 0; k < spaces.num_features(); ++k) {
    const auto& p = symmetry.permutations[k];
    const int n = spaces.domain(k).size();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("permutation is not a bijection");
      seen[v] = true;
    }
  }
}

Symmetry Inverse(const Symmetry& symmetry) {
  Symmetry inv;
  for (const auto& p : symmetry.permutations) {
    std::vector<int> q(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) q[p[v]] = static_cast<int>(v);
    inv.permutations.push_back(std::move(q));
  }
  return inv;
}

Card ApplySymmetry(const Symmetry& symmetry, const Card& card) {
  Card out = card;
  for (int k = 0; k < card.size(); ++k) out.set(k, symmetry.permutations[k][card[k]]);
  return out;
}

EpisodeState ApplySymmetry(const FeatureSpaces& spaces, const EpisodeState& state,
                           const Symmetry& symmetry) {
  ValidateSymmetry(spaces, symmetry);
  EpisodeState out = state;
  for (Card& c : out.hinter_hand) c = ApplySymmetry(symmetry, c);
  for (Card& c : out.guesser_hand) c = ApplySymmetry(symmetry, c);
  if (out.hinted_card) out.hinted_card = ApplySymmetry(symmetry, *out.hinted_card);
  return out;
}

SymmetryGroup SymmetryGroup::AllValuePermutations(const FeatureSpaces& spaces) {
  SymmetryGroup g;
  for (const auto& d : spaces.domains()) g.sizes_.push_back(d.size());
  return g;
}

SymmetryGroup SymmetryGroup::IdentityOnly(const FeatureSpaces& spaces) {
  SymmetryGroup g = AllValuePermutations(spaces);
  g.identity_only_ = true;
  return g;
}

Symmetry SymmetryGroup::Sample(Rng& rng) const {
  Symmetry s;
  for (int n : sizes_) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (!identity_only_) {
      for (int i = n - 1; i > 0; --i) std::swap(p[i], p[UniformInt(rng, i + 1)]);
    }
    s.permutations.push_back(std::move(p));
  }
  return s;
}

long long SymmetryGroup::order() const {
  if (identity_only_) return 1;
  long long total = 1;
  for (int n : sizes_)
    for (int i = 2; i <= n; ++i) total *= i;
  return total;
}

long long SymmetryGroup::Id(const Symmetry& symmetry) const {
  // Mixed radix over per-space Lehmer codes.
  long long id = 0;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    const auto& p = symmetry.permutations[k];
    const int n = sizes_[k];
    long long code = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (p[j] < p[i]) ++smaller;
      code = code * (n - i) + smaller;
    }
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    id = id * fact + code;
  }
  return identity_only_ ? 0 : id;
}

}  // namespace hintguess
