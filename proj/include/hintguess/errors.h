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

#ifndef HINTGUESS_ERRORS_H_
#define HINTGUESS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hintguess {

// Inconsistent or unsupported configuration (dimension mismatch, bad preset,
// incompatible checkpoint).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was invoked in the wrong state (e.g. backward without a
// recorded forward pass).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A game or session rule was violated (illegal action, wrong role for phase).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Persisted data failed validation (digest mismatch, truncated file).
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFormat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hintguess

#endif  // HINTGUESS_ERRORS_H_
