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

#ifndef HINTGUESS_GAME_FEATURES_H_
#define HINTGUESS_GAME_FEATURES_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hintguess {

inline constexpr int kMaxFeatures = 4;

// One feature domain: either a finite label set or an integer range.
struct FeatureDomain {
  enum class Kind { kCategorical, kOrdinal };

  static FeatureDomain Categorical(std::string name, std::vector<std::string> labels);
  static FeatureDomain Ordinal(std::string name, int min_value, int max_value);

  int size() const { return static_cast<int>(labels.size()); }
  // Ordinal domains map index i to min_value + i; categorical domains to i.
  int NumericValue(int index) const { return kind == Kind::kOrdinal ? min_value + index : index; }

  std::string name;
  Kind kind = Kind::kCategorical;
  std::vector<std::string> labels;
  int min_value = 0;
};

// A game object: one value index per feature domain.
class Card {
 public:
  Card() = default;
  explicit Card(std::initializer_list<int> values);
  explicit Card(const std::vector<int>& values);

  int size() const { return size_; }
  int operator[](int i) const { return values_[i]; }
  void set(int i, int value) { values_[i] = static_cast<std::int16_t>(value); }

  friend bool operator==(const Card&, const Card&) = default;

 private:
  std::array<std::int16_t, kMaxFeatures> values_{};
  std::uint8_t size_ = 0;
};

// Ordered feature domains shared by observations (cards) and actions.
class FeatureSpaces {
 public:
  FeatureSpaces() = default;
  explicit FeatureSpaces(std::vector<FeatureDomain> domains);

  // F1 = {1,2,3}, F2 = {A,B,C}.
  static FeatureSpaces NumbersAndLetters();
  static FeatureSpaces SingleOrdinal(int min_value, int max_value);

  int num_features() const { return static_cast<int>(domains_.size()); }
  const FeatureDomain& domain(int k) const { return domains_[k]; }
  const std::vector<FeatureDomain>& domains() const { return domains_; }

  // Product of domain sizes; actions are indexed row-major over the grid.
  int grid_size() const { return grid_size_; }
  int Index(const Card& card) const;
  Card CardAt(int index) const;
  bool Contains(const Card& card) const;

  // "2B" when every label is one character, "12" for a single domain,
  // otherwise labels joined by '|'.
  std::string Label(const Card& card) const;
  Card Parse(std::string_view label) const;

  friend bool operator==(const FeatureSpaces& a, const FeatureSpaces& b);

 private:
  bool compact_labels() const;

  std::vector<FeatureDomain> domains_;
  int grid_size_ = 0;
};

bool operator==(const FeatureDomain& a, const FeatureDomain& b);

}  // namespace hintguess

#endif  // HINTGUESS_GAME_FEATURES_H_
