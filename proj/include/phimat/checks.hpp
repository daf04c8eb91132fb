// Copyright 2026 The phimat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHIMAT_CHECKS_HPP_
#define PHIMAT_CHECKS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "phimat/core_sets.hpp"

namespace phimat {

/// Outcome of one exhaustively checked law. `witness` is non-empty exactly
/// when the law fails and lists the quantified subsets of the first
/// counterexample in canonical order.
template <class Id>
struct Verdict {
  Id id;
  bool passed = true;
  std::vector<Subset> witness;

  explicit operator bool() const { return passed; }
};

template <class Id>
Verdict<Id> pass(Id id) {
  return Verdict<Id>{id, true, {}};
}

template <class Id>
Verdict<Id> fail(Id id, std::vector<Subset> witness) {
  return Verdict<Id>{id, false, std::move(witness)};
}

enum class PiSearch {
  pruned,      // candidates of size dim(u) inside cm(u) only
  exhaustive,  // every w ⊆ E; for validating the pruned search
};

inline constexpr std::size_t kDefaultCheckSize = 10;
inline constexpr std::size_t kMaxCheckSize = 12;

/// Size cap for the exhaustive (exponential in pairs/triples) checkers.
struct CheckLimits {
  std::size_t max_size = kDefaultCheckSize;
  PiSearch pi_search = PiSearch::pruned;
};

inline void require_checkable(const GroundSet& g, const CheckLimits& limits) {
  if (limits.max_size > kMaxCheckSize) {
    throw Error(ErrorKind::ground_set_too_large,
                "check size override " + std::to_string(limits.max_size) +
                    " exceeds " + std::to_string(kMaxCheckSize));
  }
  if (g.size() > limits.max_size) {
    throw Error(ErrorKind::ground_set_too_large,
                "exhaustive checks are capped at " +
                    std::to_string(limits.max_size) + " elements, got " +
                    std::to_string(g.size()));
  }
}

}  // namespace phimat

#endif  // PHIMAT_CHECKS_HPP_
