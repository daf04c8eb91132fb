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

// Finite matroids held as their complete family of independent sets, with
// rank, closure and flats derived eagerly at construction.

#ifndef PHIMAT_MATROID_HPP_
#define PHIMAT_MATROID_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "phimat/checks.hpp"
#include "phimat/core_sets.hpp"

namespace phimat {

enum class IndependenceAxiom { empty_set, hereditary, exchange };

constexpr std::string_view to_string(IndependenceAxiom a) {
  switch (a) {
    case IndependenceAxiom::empty_set: return "empty-set";
    case IndependenceAxiom::hereditary: return "hereditary";
    case IndependenceAxiom::exchange: return "exchange";
  }
  return "?";
}

/// Map from every subset of a ground to its image. Total by construction.
class ClosureTable {
 public:
  ClosureTable(GroundSet ground, std::vector<Mask> image)
      : ground_(std::move(ground)), image_(std::move(image)) {
    if (image_.size() != ground_.subset_count()) {
      throw Error(ErrorKind::invalid_subset,
                  "closure table must list all " +
                      std::to_string(ground_.subset_count()) + " subsets");
    }
    for (Mask m : image_) {
      if (!ground_.contains_mask(m)) {
        throw Error(ErrorKind::invalid_subset, "closure image outside ground");
      }
    }
  }

  const GroundSet& ground() const { return ground_; }
  Mask operator()(Mask u) const { return image_.at(u); }
  Subset operator()(const Subset& u) const {
    if (!(u.ground() == ground_)) {
      throw Error(ErrorKind::mismatched_ground, "closure table lookup");
    }
    return Subset(ground_, image_[u.bits()]);
  }
  std::span<const Mask> image() const { return image_; }

  friend bool operator==(const ClosureTable& a, const ClosureTable& b) {
    return a.ground_ == b.ground_ && a.image_ == b.image_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> image_;
};

class Matroid {
 public:
  /// Validates the independence axioms (empty set, hereditary, exchange) and
  /// derives rank, closure and flats. Throws axiom-violation with witness
  ///   empty-set   [∅]
  ///   hereditary  [missing subset J, independent I ⊇ J with |I| = |J| + 1]
  ///   exchange    [I1, I2] with |I1| < |I2| and no x ∈ I2 \ I1 extending I1
  static Matroid from_independents(const SubsetFamily& independents);

  /// Builds the matroid whose flats are `flats`: closure is the intersection
  /// of the flats containing u, independents follow from the closure by the
  /// single-deletion test, and the rebuilt flat family must equal the input.
  static Matroid from_flats(const SubsetFamily& flats);

  const GroundSet& ground() const { return independents_.ground(); }
  std::size_t size() const { return ground().size(); }
  const SubsetFamily& independents() const { return independents_; }
  const SubsetFamily& flats() const { return flats_; }

  bool independent(Mask u) const { return independent_[u] != 0; }
  int rank(Mask u) const { return rank_[u]; }
  Mask closure(Mask u) const { return closure_[u]; }
  ClosureTable closure_table() const { return ClosureTable(ground(), closure_); }

  /// Maximal independent sets, canonical order.
  SubsetFamily bases() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.independents_ == b.independents_;
  }

 private:
  Matroid(SubsetFamily independents, std::vector<std::uint8_t> independent,
          std::vector<std::int8_t> rank);

  SubsetFamily independents_;
  std::vector<std::uint8_t> independent_;
  std::vector<std::int8_t> rank_;
  std::vector<Mask> closure_;
  SubsetFamily flats_;
};

namespace detail {

// rank[u] = largest independent subset of u, assuming `independent` is
// hereditary.
inline std::vector<std::int8_t> rank_table(std::size_t n,
                                           const std::vector<std::uint8_t>& independent) {
  const std::size_t count = subset_count(n);
  std::vector<std::int8_t> rank(count, 0);
  for (Mask u = 1; u < count; ++u) {
    if (independent[u]) {
      rank[u] = static_cast<std::int8_t>(cardinality(u));
      continue;
    }
    std::int8_t best = 0;
    for (Mask rest = u; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank[u & ~(rest & (~rest + 1))]);
    }
    rank[u] = best;
  }
  return rank;
}

inline void matroid_check_ground(const GroundSet& g, const Subset& u) {
  if (!(u.ground() == g)) {
    throw Error(ErrorKind::mismatched_ground, "subset is not over the matroid's ground");
  }
}

}  // namespace detail

inline Matroid::Matroid(SubsetFamily independents,
                        std::vector<std::uint8_t> independent,
                        std::vector<std::int8_t> rank)
    : independents_(std::move(independents)),
      independent_(std::move(independent)),
      rank_(std::move(rank)),
      flats_(independents_.ground()) {
  const std::size_t n = size();
  const std::size_t count = subset_count(n);
  closure_.assign(count, 0);
  std::vector<Mask> flats;
  for (Mask u = 0; u < count; ++u) {
    Mask cl = u;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank_[u | bit(i)] == rank_[u]) cl |= bit(i);
    }
    closure_[u] = cl;
    if (cl == u) flats.push_back(u);
  }
  flats_ = SubsetFamily(ground(), std::move(flats));
}

inline Matroid Matroid::from_independents(const SubsetFamily& family) {
  const GroundSet& g = family.ground();
  const std::size_t n = g.size();
  const std::size_t count = subset_count(n);
  std::vector<std::uint8_t> independent(count, 0);
  for (Mask m : family.masks()) independent[m] = 1;

  auto violation = [&](IndependenceAxiom which, std::vector<Subset> witness) {
    std::string message = "independence axiom '" + std::string(to_string(which)) +
                          "' fails";
    for (const auto& s : witness) message += " " + s.to_string();
    return Error(ErrorKind::axiom_violation, message, std::move(witness));
  };

  if (!independent[0]) {
    throw violation(IndependenceAxiom::empty_set, {Subset::empty(g)});
  }
  for (Mask u : family.masks()) {
    // Highest element first, so the smallest missing subset is found first.
    for (std::size_t i = n; i-- > 0;) {
      if ((u & bit(i)) && !independent[u & ~bit(i)]) {
        throw violation(IndependenceAxiom::hereditary,
                        {Subset(g, u & ~bit(i)), Subset(g, u)});
      }
    }
  }

  auto rank = detail::rank_table(n, independent);
  // Exchange fails for I1 iff some larger independent set avoids every
  // element that extends I1, i.e. lies inside I1 ∪ (E \ extenders).
  for (Mask small : family.masks()) {
    Mask extenders = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(small & bit(i)) && independent[small | bit(i)]) extenders |= bit(i);
    }
    const Mask room = small | (g.full() & ~extenders);
    if (rank[room] <= cardinality(small)) continue;
    Mask large = 0;
    any_submask(room, [&](Mask s) {
      if (!independent[s] || cardinality(s) <= cardinality(small)) return false;
      large = s;
      return true;
    });
    throw violation(IndependenceAxiom::exchange, {Subset(g, small), Subset(g, large)});
  }
  return Matroid(family, std::move(independent), std::move(rank));
}

inline Matroid Matroid::from_flats(const SubsetFamily& flats) {
  const GroundSet& g = flats.ground();
  const std::size_t n = g.size();
  if (!flats.contains(g.full())) {
    throw Error(ErrorKind::not_intersection_closed,
                "the ground set must be a flat", {Subset::full(g)});
  }
  const auto masks = flats.masks();
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (!flats.contains(masks[i] & masks[j])) {
        throw Error(ErrorKind::not_intersection_closed,
                    "intersection of " + Subset(g, masks[i]).to_string() +
                        " and " + Subset(g, masks[j]).to_string() +
                        " is not a flat",
                    {Subset(g, masks[i]), Subset(g, masks[j])});
      }
    }
  }

  const auto closure = intersect_over_supersets(n, masks).region;
  std::vector<Mask> independents;
  for (Mask u = 0; u < subset_count(n); ++u) {
    bool free = true;
    for (std::size_t i = 0; i < n && free; ++i) {
      if ((u & bit(i)) && (closure[u & ~bit(i)] & bit(i))) free = false;
    }
    if (free) independents.push_back(u);
  }

  std::optional<Matroid> built;
  try {
    built = from_independents(SubsetFamily(g, std::move(independents)));
  } catch (const Error& e) {
    throw Error(ErrorKind::not_a_matroid,
                std::string("derived independents are not a matroid (") +
                    e.what() + ")",
                e.witness());
  }
  if (!(built->flats() == flats)) {
    const auto rebuilt = built->flats().masks();
    for (Mask u = 0; u < subset_count(n); ++u) {
      if (flats.contains(u) != std::ranges::binary_search(rebuilt, u)) {
        throw Error(ErrorKind::flats_mismatch,
                    Subset(g, u).to_string() +
                        (flats.contains(u) ? " is not closed in the derived matroid"
                                           : " is closed in the derived matroid but not listed"),
                    {Subset(g, u)});
      }
    }
  }
  return *std::move(built);
}

inline SubsetFamily Matroid::bases() const {
  const int r = rank_[ground().full()];
  std::vector<Mask> out;
  for (Mask m : independents_.masks()) {
    if (cardinality(m) == r) out.push_back(m);
  }
  return SubsetFamily(ground(), std::move(out));
}

inline std::size_t rank(const Matroid& m, const Subset& u) {
  detail::matroid_check_ground(m.ground(), u);
  return static_cast<std::size_t>(m.rank(u.bits()));
}

inline Subset closure(const Matroid& m, const Subset& u) {
  detail::matroid_check_ground(m.ground(), u);
  return Subset(m.ground(), m.closure(u.bits()));
}

/// First loop, else first dependent pair, in canonical order.
inline std::optional<Subset> simplicity_witness(const Matroid& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.independent(bit(i))) return Subset(m.ground(), bit(i));
  }
  for (Mask u = 0; u < m.ground().subset_count(); ++u) {
    if (cardinality(u) == 2 && !m.independent(u)) return Subset(m.ground(), u);
  }
  return std::nullopt;
}

/// No loops and no parallel pairs.
inline bool is_simple(const Matroid& m) { return !simplicity_witness(m); }

enum class ClosureLaw { extensive, monotone, idempotent, exchange };

inline constexpr std::array<ClosureLaw, 4> kClosureLaws{
    ClosureLaw::extensive, ClosureLaw::monotone, ClosureLaw::idempotent,
    ClosureLaw::exchange};

constexpr std::string_view to_string(ClosureLaw law) {
  switch (law) {
    case ClosureLaw::extensive: return "extensive";
    case ClosureLaw::monotone: return "monotone";
    case ClosureLaw::idempotent: return "idempotent";
    case ClosureLaw::exchange: return "exchange";
  }
  return "?";
}

using ClosureLawReport = Verdict<ClosureLaw>;

/// One verdict per law. Witnesses: extensive/idempotent [u]; monotone [u, v]
/// with u ⊆ v; exchange [u, {x}, {y}] with y ∈ cl(u+x) \ cl(u), x ∉ cl(u+y).
struct ClosureAxiomReport {
  std::array<ClosureLawReport, 4> laws{
      pass(ClosureLaw::extensive), pass(ClosureLaw::monotone),
      pass(ClosureLaw::idempotent), pass(ClosureLaw::exchange)};

  const ClosureLawReport& operator[](ClosureLaw law) const {
    return laws[static_cast<std::size_t>(law)];
  }
  bool passed() const {
    return std::ranges::all_of(laws, [](const auto& l) { return l.passed; });
  }
};

inline ClosureAxiomReport check_closure_axioms(const ClosureTable& t,
                                               const CheckLimits& limits = {}) {
  const GroundSet& g = t.ground();
  require_checkable(g, limits);
  const std::size_t n = g.size();
  const std::size_t count = g.subset_count();
  ClosureAxiomReport report;
  auto& [extensive, monotone, idempotent, exchange] = report.laws;

  for (Mask u = 0; u < count && extensive.passed; ++u) {
    if (!is_submask(u, t(u))) extensive = fail(ClosureLaw::extensive, {Subset(g, u)});
  }
  for (Mask u = 0; u < count && monotone.passed; ++u) {
    any_submask(g.full() & ~u, [&](Mask extra) {
      if (is_submask(t(u), t(u | extra))) return false;
      monotone = fail(ClosureLaw::monotone, {Subset(g, u), Subset(g, u | extra)});
      return true;
    });
  }
  for (Mask u = 0; u < count && idempotent.passed; ++u) {
    if (t(t(u)) != t(u)) idempotent = fail(ClosureLaw::idempotent, {Subset(g, u)});
  }
  for (Mask u = 0; u < count && exchange.passed; ++u) {
    for (std::size_t x = 0; x < n && exchange.passed; ++x) {
      const Mask gained = t(u | bit(x)) & ~t(u);
      for (std::size_t y = 0; y < n; ++y) {
        if ((gained & bit(y)) && !(t(u | bit(y)) & bit(x))) {
          exchange = fail(ClosureLaw::exchange, {Subset(g, u), Subset::singleton(g, x),
                                                 Subset::singleton(g, y)});
          break;
        }
      }
    }
  }
  return report;
}

/// {u : x ∉ t(u \ {x}) for every x ∈ u}, validated as a matroid (errors from
/// Matroid::from_independents propagate when t is not a matroid closure).
inline SubsetFamily independents_from_closure(const ClosureTable& t) {
  const GroundSet& g = t.ground();
  std::vector<Mask> out;
  for (Mask u = 0; u < g.subset_count(); ++u) {
    bool free = true;
    for (Mask rest = u; rest != 0 && free; rest &= rest - 1) {
      const Mask x = rest & (~rest + 1);
      if (t(u & ~x) & x) free = false;
    }
    if (free) out.push_back(u);
  }
  SubsetFamily family(g, std::move(out));
  (void)Matroid::from_independents(family);
  return family;
}

/// All intersections of sub-collections of f; the empty sub-collection
/// contributes the full ground.
inline SubsetFamily intersection_closure(const SubsetFamily& f) {
  const GroundSet& g = f.ground();
  const auto region = intersect_over_supersets(g.size(), f.masks()).region;
  std::vector<Mask> closed;
  for (Mask u = 0; u < g.subset_count(); ++u) {
    if (region[u] == u) closed.push_back(u);
  }
  return SubsetFamily(g, std::move(closed));
}

/// Whether two families generate the same intersection-closed family.
inline bool same_flat_lattice(const SubsetFamily& a, const SubsetFamily& b) {
  if (!(a.ground() == b.ground())) {
    throw Error(ErrorKind::mismatched_ground, "flat lattices over different grounds");
  }
  return intersection_closure(a) == intersection_closure(b);
}

}  // namespace phimat

#endif  // PHIMAT_MATROID_HPP_
