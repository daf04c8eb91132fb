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

// Whitehead's theory of dimension over a finite ground set.
//
// A PhiSystem designates some subsets of E as φ-classes. The φ-common region
// cm(u) is the intersection of the φ-classes containing u. From it:
//
//   φ-equivalent   cm(u) = cm(v)
//   φ-prime        u ≠ ∅ and no proper subset of u has the same region
//   φ-axial        φ-prime of largest size among φ-primes with its region
//   dim(u)         size of a φ-axial set φ-equivalent to u (u ≠ ∅)
//   φ-maximal      every φ-prime v ⊆ u equivalent to u is φ-axial
//
// A set contained in no φ-class has no common region. Everything below
// except common_region(..., Uncovered::reject) treats such sets as if E were
// a φ-class, i.e. works on φ ∪ {E}; when axiom λ holds this changes nothing.

#ifndef PHIMAT_WHITEHEAD_HPP_
#define PHIMAT_WHITEHEAD_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "phimat/core_sets.hpp"

namespace phimat {

class PhiSystem {
 public:
  /// Closure tables are built eagerly here; afterwards the value is
  /// immutable and every query is a table lookup.
  explicit PhiSystem(SubsetFamily classes);

  const GroundSet& ground() const { return classes_.ground(); }
  const SubsetFamily& classes() const { return classes_; }
  std::size_t size() const { return ground().size(); }

  /// cm(u), with the full ground for sets no class contains.
  Mask region(Mask u) const { return region_[u]; }
  bool covered(Mask u) const { return covered_[u] != 0; }
  bool prime(Mask u) const { return prime_[u] != 0; }

  /// Size of the largest φ-prime set with the same region as u, or -1 when
  /// there is none.
  int top_prime_size(Mask u) const { return top_prime_[region_[u]]; }

  bool axial(Mask u) const {
    return prime(u) && cardinality(u) == top_prime_size(u);
  }

  /// dim(u); nullopt for u = ∅ or when no φ-prime set is equivalent to u.
  std::optional<int> dimension_of(Mask u) const {
    if (u == 0 || top_prime_size(u) < 0) return std::nullopt;
    return top_prime_size(u);
  }

 private:
  SubsetFamily classes_;
  std::vector<Mask> region_;
  std::vector<std::uint8_t> covered_;
  std::vector<std::uint8_t> prime_;
  std::vector<std::int8_t> top_prime_;  // indexed by region
};

inline PhiSystem::PhiSystem(SubsetFamily classes)
    : classes_(std::move(classes)) {
  const std::size_t n = size();
  const std::size_t count = subset_count(n);
  auto table = intersect_over_supersets(n, classes_.masks());
  region_ = std::move(table.region);
  covered_ = std::move(table.covered);

  // Regions are monotone, so a proper subset with the same region exists iff
  // some single deletion keeps the region.
  prime_.assign(count, 0);
  top_prime_.assign(count, -1);
  for (Mask u = 1; u < count; ++u) {
    bool minimal = true;
    for (Mask rest = u; rest != 0; rest &= rest - 1) {
      const Mask x = rest & (~rest + 1);
      if (region_[u & ~x] == region_[u]) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    prime_[u] = 1;
    auto& top = top_prime_[region_[u]];
    top = std::max<std::int8_t>(top, static_cast<std::int8_t>(cardinality(u)));
  }
}

enum class Uncovered {
  reject,     // no-containing-class error
  use_ground, // empty intersection is E
};

namespace detail {
inline void check_ground(const PhiSystem& sys, const Subset& u) {
  if (!(u.ground() == sys.ground())) {
    throw Error(ErrorKind::mismatched_ground, "subset is not over the system's ground");
  }
}
inline void check_nonempty(const Subset& u, const char* what) {
  if (u.empty()) throw Error(ErrorKind::empty_input, what);
}
}  // namespace detail

inline Subset common_region(const PhiSystem& sys, const Subset& u,
                            Uncovered convention = Uncovered::reject) {
  detail::check_ground(sys, u);
  if (convention == Uncovered::reject && !sys.covered(u.bits())) {
    throw Error(ErrorKind::no_containing_class,
                "no phi-class contains " + u.to_string(), {u});
  }
  return Subset(sys.ground(), sys.region(u.bits()));
}

inline bool is_phi_equivalent(const PhiSystem& sys, const Subset& u,
                              const Subset& v) {
  return common_region(sys, u) == common_region(sys, v);
}

inline bool is_phi_prime(const PhiSystem& sys, const Subset& u) {
  detail::check_ground(sys, u);
  return sys.prime(u.bits());
}

inline bool is_phi_axial(const PhiSystem& sys, const Subset& u) {
  detail::check_ground(sys, u);
  return sys.axial(u.bits());
}

inline std::size_t dimension(const PhiSystem& sys, const Subset& u) {
  detail::check_ground(sys, u);
  detail::check_nonempty(u, "the dimension of the empty set is undefined");
  auto dim = sys.dimension_of(u.bits());
  if (!dim) {
    throw Error(ErrorKind::undefined_dimension,
                "no phi-prime set is phi-equivalent to " + u.to_string(), {u});
  }
  return static_cast<std::size_t>(*dim);
}

namespace detail {
// Smallest v ⊆ u with region(v) = region(u), first in canonical order among
// those of that size.
inline Mask smallest_equivalent_subset(const PhiSystem& sys, Mask u) {
  const Mask target = sys.region(u);
  Mask best = u;
  for_each_submask(u, [&](Mask v) {
    if (cardinality(v) < cardinality(best) && sys.region(v) == target) best = v;
  });
  return best;
}
}  // namespace detail

/// A minimum-size φ-prime subset of u that is φ-equivalent to u.
inline Subset phi_prime_reduction(const PhiSystem& sys, const Subset& u) {
  detail::check_ground(sys, u);
  detail::check_nonempty(u, "cannot reduce the empty set");
  const Mask reduced = detail::smallest_equivalent_subset(sys, u.bits());
  if (reduced == 0) {
    throw Error(ErrorKind::undefined_dimension,
                u.to_string() + " is phi-equivalent to the empty set", {u});
  }
  return Subset(sys.ground(), reduced);
}

/// Both readings of φ-maximality for one set. `holds` is the canonical one
/// (φ-prime subsets φ-equivalent to u are φ-axial); `holds_for_all_primes`
/// drops the equivalence requirement. The witnesses are the first offending
/// φ-prime subsets in canonical order.
struct Maximality {
  bool holds = true;
  bool holds_for_all_primes = true;
  std::optional<Subset> witness;
  std::optional<Subset> witness_for_all_primes;

  explicit operator bool() const { return holds; }
};

inline Maximality is_phi_maximal(const PhiSystem& sys, const Subset& u) {
  detail::check_ground(sys, u);
  detail::check_nonempty(u, "maximality of the empty set");
  Maximality out;
  const Mask target = sys.region(u.bits());
  for_each_submask(u.bits(), [&](Mask v) {
    if (!sys.prime(v) || sys.axial(v)) return;
    if (out.holds_for_all_primes) {
      out.holds_for_all_primes = false;
      out.witness_for_all_primes = Subset(sys.ground(), v);
    }
    if (out.holds && sys.region(v) == target) {
      out.holds = false;
      out.witness = Subset(sys.ground(), v);
    }
  });
  return out;
}

/// Maximality of every subset at once, for the exhaustive checkers.
/// Entry 0 (the empty set) is left false.
struct MaximalityTable {
  std::vector<std::uint8_t> equivalent_primes;  // canonical reading
  std::vector<std::uint8_t> all_primes;
};

inline MaximalityTable maximality_table(const PhiSystem& sys) {
  const std::size_t n = sys.size();
  const std::size_t count = subset_count(n);
  std::vector<std::uint8_t> bad(count, 0);
  for (Mask v = 1; v < count; ++v) bad[v] = sys.prime(v) && !sys.axial(v);

  MaximalityTable t{std::vector<std::uint8_t>(count, 0),
                    std::vector<std::uint8_t>(count, 0)};

  // A bad prime v spoils u iff v ⊆ u and region(v) = region(u), which is the
  // same as v ⊆ u ⊆ region(v).
  std::vector<std::uint8_t> spoiled(count, 0);
  for (Mask v = 1; v < count; ++v) {
    if (!bad[v]) continue;
    const Mask room = sys.region(v) & ~v;
    for_each_submask(room, [&](Mask extra) { spoiled[v | extra] = 1; });
  }

  // Reading A: any bad prime below u at all. Subset-sum transform.
  std::vector<std::uint8_t> below = bad;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < count; ++m) {
      if (m & bit(i)) below[m] |= below[m & ~bit(i)];
    }
  }
  for (Mask u = 1; u < count; ++u) {
    t.equivalent_primes[u] = !spoiled[u];
    t.all_primes[u] = !below[u];
  }
  return t;
}

}  // namespace phimat

#endif  // PHIMAT_WHITEHEAD_HPP_
