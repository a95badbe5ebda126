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

#include "hintguess/game/features.h"

#include <stdexcept>

#include "hintguess/errors.h"

namespace hintguess {

FeatureDomain FeatureDomain::Categorical(std::string name, std::vector<std::string> labels) {
  if (labels.empty()) throw ConfigurationError("feature domain '" + name + "' is empty");
  FeatureDomain d;
  d.name = std::move(name);
  d.kind = Kind::kCategorical;
  d.labels = std::move(labels);
  return d;
}

FeatureDomain FeatureDomain::Ordinal(std::string name, int min_value, int max_value) {
  if (max_value < min_value) throw ConfigurationError("ordinal domain '" + name + "' is empty");
  FeatureDomain d;
  d.name = std::move(name);
  d.kind = Kind::kOrdinal;
  d.min_value = min_value;
  for (int v = min_value; v <= max_value; ++v) d.labels.push_back(std::to_string(v));
  return d;
}

bool operator==(const FeatureDomain& a, const FeatureDomain& b) {
  return a.name == b.name && a.kind == b.kind && a.labels == b.labels &&
         a.min_value == b.min_value;
}

Card::Card(std::initializer_list<int> values) : Card(std::vector<int>(values)) {}

Card::Card(const std::vector<int>& values) {
  if (values.size() > kMaxFeatures) throw ConfigurationError("too many card features");
  size_ = static_cast<std::uint8_t>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values_[i] = static_cast<std::int16_t>(values[i]);
  }
}

FeatureSpaces::FeatureSpaces(std::vector<FeatureDomain> domains)
    : domains_(std::move(domains)) {
  if (domains_.empty()) throw ConfigurationError("at least one feature space is required");
  if (static_cast<int>(domains_.size()) > kMaxFeatures) {
    throw ConfigurationError("at most " + std::to_string(kMaxFeatures) + " feature spaces");
  }
  grid_size_ = 1;
  for (const auto& d : domains_) {
    if (d.size() == 0) throw ConfigurationError("feature domain '" + d.name + "' is empty");
    grid_size_ *= d.size();
  }
}

FeatureSpaces FeatureSpaces::NumbersAndLetters() {
  return FeatureSpaces({FeatureDomain::Categorical("number", {"1", "2", "3"}),
                        FeatureDomain::Categorical("letter", {"A", "B", "C"})});
}

FeatureSpaces FeatureSpaces::SingleOrdinal(int min_value, int max_value) {
  return FeatureSpaces({FeatureDomain::Ordinal("number", min_value, max_value)});
}

int FeatureSpaces::Index(const Card& card) const {
  if (!Contains(card)) throw std::invalid_argument("card outside feature spaces");
  int index = 0;
  for (int k = 0; k < num_features(); ++k) index = index * domains_[k].size() + card[k];
  return index;
}

Card FeatureSpaces::CardAt(int index) const {
  if (index < 0 || index >= grid_size_) throw std::invalid_argument("action index out of range");
  std::vector<int> values(domains_.size());
  for (int k = num_features() - 1; k >= 0; --k) {
    values[k] = index % domains_[k].size();
    index /= domains_[k].size();
  }
  return Card(values);
}

bool FeatureSpaces::Contains(const Card& card) const {
  if (card.size() != num_features()) return false;
  for (int k = 0; k < num_features(); ++k)
    if (card[k] < 0 || card[k] >= domains_[k].size()) return false;
  return true;
}

bool FeatureSpaces::compact_labels() const {
  if (domains_.size() == 1) return true;
  for (const auto& d : domains_)
    for (const auto& l : d.labels)
      if (l.size() != 1) return false;
  return true;
}

std::string FeatureSpaces::Label(const Card& card) const {
  if (!Contains(card)) throw std::invalid_argument("card outside feature spaces");
  std::string out;
  const bool compact = compact_labels();
  for (int k = 0; k < num_features(); ++k) {
    if (k > 0 && !compact) out += '|';
    out += domains_[k].labels[card[k]];
  }
  return out;
}

Card FeatureSpaces::Parse(std::string_view label) const {
  std::vector<int> values;
  if (domains_.size() == 1) {
    const auto& labels = domains_[0].labels;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == label) return Card({i});
    throw std::invalid_argument("unknown card label: " + std::string(label));
  }
  std::vector<std::string_view> parts;
  if (compact_labels()) {
    if (label.size() != domains_.size()) {
      throw std::invalid_argument("unknown card label: " + std::string(label));
    }
    for (std::size_t i = 0; i < label.size(); ++i) parts.push_back(label.substr(i, 1));
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = label.find('|', start);
      parts.push_back(label.substr(start, bar == std::string_view::npos ? bar : bar - start));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (parts.size() != domains_.size()) {
      throw std::invalid_argument("unknown card label: " + std::string(label));
    }
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& labels = domains_[k].labels;
    int found = -1;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == parts[k]) found = i;
    if (found < 0) throw std::invalid_argument("unknown card label: " + std::string(label));
    values.push_back(found);
  }
  return Card(values);
}

bool operator==(const FeatureSpaces& a, const FeatureSpaces& b) {
  return a.domains_ == b.domains_;
}

}  // namespace hintguess
