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

// The five generalized geometrical axioms, checked exhaustively.
//
//   lambda    E is a φ-class
//   mu        every singleton is a φ-class
//   nu-prime  dim(E) is defined and cm(∅) = ∅
//   pi        for all u and φ-axial v ⊆ cm(u) some w makes v ∪ w φ-axial
//             and φ-equivalent to u
//   rho       for φ-axial u, v with |u ∩ v| ≥ 2, u ∪ v is φ-maximal
//
// Witness layouts: lambda [E]; mu [{x}]; nu-prime [∅] when cm(∅) ≠ ∅ and
// [E] when dim(E) is undefined; pi [u, v]; rho [u, v].

#ifndef PHIMAT_AXIOMS_HPP_
#define PHIMAT_AXIOMS_HPP_

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "phimat/checks.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

enum class Axiom { lambda, mu, nu_prime, pi, rho };

inline constexpr std::array<Axiom, 5> kAxioms{Axiom::lambda, Axiom::mu,
                                              Axiom::nu_prime, Axiom::pi,
                                              Axiom::rho};

constexpr std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::lambda: return "lambda";
    case Axiom::mu: return "mu";
    case Axiom::nu_prime: return "nu-prime";
    case Axiom::pi: return "pi";
    case Axiom::rho: return "rho";
  }
  return "?";
}

using AxiomVerdict = Verdict<Axiom>;

struct AxiomReport {
  std::array<AxiomVerdict, 5> verdicts{
      pass(Axiom::lambda), pass(Axiom::mu), pass(Axiom::nu_prime),
      pass(Axiom::pi), pass(Axiom::rho)};

  const AxiomVerdict& operator[](Axiom a) const {
    return verdicts[static_cast<std::size_t>(a)];
  }
  AxiomVerdict& operator[](Axiom a) {
    return verdicts[static_cast<std::size_t>(a)];
  }
  bool passed() const {
    return std::ranges::all_of(verdicts, [](const auto& v) { return v.passed; });
  }
};

namespace detail {

inline bool pi_extension_exists_pruned(const PhiSystem& sys, Mask region, Mask v) {
  const int dim = sys.top_prime_size(region);
  if (dim < cardinality(v)) return false;
  return any_submask(region & ~v, [&](Mask w) {
    const Mask s = v | w;
    return cardinality(s) == dim && sys.axial(s) && sys.region(s) == region;
  });
}

inline bool pi_extension_exists_exhaustive(const PhiSystem& sys, Mask region,
                                           Mask v) {
  return any_submask(sys.ground().full(), [&](Mask w) {
    const Mask s = v | w;
    return sys.axial(s) && sys.region(s) == region;
  });
}

inline bool pi_extension_exists(const PhiSystem& sys, Mask region, Mask v,
                                PiSearch search) {
  return search == PiSearch::pruned
             ? pi_extension_exists_pruned(sys, region, v)
             : pi_extension_exists_exhaustive(sys, region, v);
}

inline AxiomVerdict check_pi(const PhiSystem& sys, PiSearch search) {
  const std::size_t count = sys.ground().subset_count();
  // The instance depends on u only through its region; remember the first
  // failing v per region (0 = passes, kUnknown = not yet examined).
  constexpr Mask kUnknown = ~Mask{0};
  std::vector<Mask> failing(count, kUnknown);
  for (Mask u = 0; u < count; ++u) {
    const Mask region = sys.region(u);
    if (failing[region] == kUnknown) {
      failing[region] = 0;
      any_submask(region, [&](Mask v) {
        if (!sys.axial(v) || pi_extension_exists(sys, region, v, search)) {
          return false;
        }
        failing[region] = v;
        return true;
      });
    }
    if (failing[region] != 0) {
      return fail(Axiom::pi, {Subset(sys.ground(), u),
                              Subset(sys.ground(), failing[region])});
    }
  }
  return pass(Axiom::pi);
}

inline AxiomVerdict check_rho(const PhiSystem& sys) {
  const std::size_t count = sys.ground().subset_count();
  std::vector<Mask> axials;
  for (Mask u = 1; u < count; ++u) {
    if (sys.axial(u)) axials.push_back(u);
  }
  const auto maximal = maximality_table(sys);
  for (Mask u : axials) {
    for (Mask v : axials) {
      if (cardinality(u & v) < 2) continue;
      if (!maximal.equivalent_primes[u | v]) {
        return fail(Axiom::rho, {Subset(sys.ground(), u), Subset(sys.ground(), v)});
      }
    }
  }
  return pass(Axiom::rho);
}

}  // namespace detail

/// Checks all five axioms. pi and rho are exhaustive and need the ground to
/// fit `limits` (ground-set-too-large otherwise); lambda, mu and nu-prime are
/// linear.
inline AxiomReport check_axioms(const PhiSystem& sys,
                                const CheckLimits& limits = {}) {
  require_checkable(sys.ground(), limits);
  const GroundSet& g = sys.ground();
  AxiomReport report;

  if (!sys.classes().contains(g.full())) {
    report[Axiom::lambda] = fail(Axiom::lambda, {Subset::full(g)});
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!sys.classes().contains(bit(i))) {
      report[Axiom::mu] = fail(Axiom::mu, {Subset::singleton(g, i)});
      break;
    }
  }
  if (!g.empty() && !sys.dimension_of(g.full())) {
    report[Axiom::nu_prime] = fail(Axiom::nu_prime, {Subset::full(g)});
  } else if (sys.region(0) != 0) {
    report[Axiom::nu_prime] = fail(Axiom::nu_prime, {Subset::empty(g)});
  }
  report[Axiom::pi] = detail::check_pi(sys, limits.pi_search);
  report[Axiom::rho] = detail::check_rho(sys);
  return report;
}

/// Re-checks a witness against the axiom's definition directly (unpruned),
/// independent of the search that produced it. True iff the witness really
/// shows a violation.
inline bool confirms_violation(const PhiSystem& sys, Axiom axiom,
                               std::span<const Subset> witness) {
  const GroundSet& g = sys.ground();
  for (const auto& s : witness) {
    if (!(s.ground() == g)) return false;
  }
  switch (axiom) {
    case Axiom::lambda:
      return witness.size() == 1 && witness[0].bits() == g.full() &&
             !sys.classes().contains(witness[0]);
    case Axiom::mu:
      return witness.size() == 1 && witness[0].size() == 1 &&
             !sys.classes().contains(witness[0]);
    case Axiom::nu_prime:
      if (witness.size() != 1) return false;
      if (witness[0].empty()) return sys.region(0) != 0;
      return witness[0].bits() == g.full() && !sys.dimension_of(g.full());
    case Axiom::pi: {
      if (witness.size() != 2) return false;
      const Mask u = witness[0].bits();
      const Mask v = witness[1].bits();
      const Mask region = sys.region(u);
      return sys.axial(v) && is_submask(v, region) &&
             !detail::pi_extension_exists_exhaustive(sys, region, v);
    }
    case Axiom::rho: {
      if (witness.size() != 2) return false;
      const auto& u = witness[0];
      const auto& v = witness[1];
      return sys.axial(u.bits()) && sys.axial(v.bits()) &&
             (u & v).size() >= 2 && !is_phi_maximal(sys, u | v).holds;
    }
  }
  return false;
}

}  // namespace phimat

#endif  // PHIMAT_AXIOMS_HPP_
