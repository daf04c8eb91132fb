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

// Exhaustive checkers for the dimension-theory propositions that hold in
// every geometrical system. Each instantiates the hypothesis over all subsets
// and reports the first instance (canonical order) whose conclusion fails.
//
//   dimension-monotone             ∅ ≠ v, cm(v) ⊆ cm(u)  ⇒  dim v ≤ dim u
//                                  witness [u, v]
//   dimension-detects-equivalence  same hypothesis; cm(v) = cm(u) ⇔ dim v = dim u
//                                  witness [u, v]
//   prime-reduction                every u ≠ ∅ has a φ-prime u' ⊆ u
//                                  φ-equivalent to u; witness [u]
//   axial-extension                v φ-prime, x ∉ cm(v), v ∪ {x} φ-maximal
//                                  ⇒ v and v ∪ {x} φ-axial and
//                                  dim(v ∪ {x}) = dim v + 1; witness [v, {x}]
//   maximal-heredity               nonempty subsets of φ-maximal sets are
//                                  φ-maximal; witness [u, u']
//   prime-iff-axial                φ-prime ⇔ φ-axial; witness [u]
//
// An instance whose dimension is undefined counts as a failure.

#ifndef PHIMAT_PROPOSITIONS_HPP_
#define PHIMAT_PROPOSITIONS_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "phimat/checks.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

enum class Proposition {
  dimension_monotone,
  dimension_detects_equivalence,
  prime_reduction,
  axial_extension,
  maximal_heredity,
  prime_iff_axial,
};

inline constexpr std::array<Proposition, 6> kPropositions{
    Proposition::dimension_monotone, Proposition::dimension_detects_equivalence,
    Proposition::prime_reduction,    Proposition::axial_extension,
    Proposition::maximal_heredity,   Proposition::prime_iff_axial};

constexpr std::string_view to_string(Proposition p) {
  switch (p) {
    case Proposition::dimension_monotone: return "dimension-monotone";
    case Proposition::dimension_detects_equivalence: return "dimension-detects-equivalence";
    case Proposition::prime_reduction: return "prime-reduction";
    case Proposition::axial_extension: return "axial-extension";
    case Proposition::maximal_heredity: return "maximal-heredity";
    case Proposition::prime_iff_axial: return "prime-iff-axial";
  }
  return "?";
}

using PropertyReport = Verdict<Proposition>;

namespace detail {

template <class Conclusion>
PropertyReport check_dimension_pairs(const PhiSystem& sys, Proposition id,
                                     Conclusion&& conclusion) {
  const std::size_t count = sys.ground().subset_count();
  for (Mask u = 0; u < count; ++u) {
    const auto du = sys.dimension_of(u);
    for (Mask v = 1; v < count; ++v) {
      if (!is_submask(sys.region(v), sys.region(u))) continue;
      const auto dv = sys.dimension_of(v);
      if (!du || !dv || !conclusion(u, v, *du, *dv)) {
        return fail(id, {Subset(sys.ground(), u), Subset(sys.ground(), v)});
      }
    }
  }
  return pass(id);
}

inline PropertyReport check_prime_reduction(const PhiSystem& sys) {
  const std::size_t count = sys.ground().subset_count();
  for (Mask u = 1; u < count; ++u) {
    const Mask reduced = smallest_equivalent_subset(sys, u);
    if (reduced == 0 || !sys.prime(reduced) ||
        sys.region(reduced) != sys.region(u)) {
      return fail(Proposition::prime_reduction, {Subset(sys.ground(), u)});
    }
  }
  return pass(Proposition::prime_reduction);
}

inline PropertyReport check_axial_extension(const PhiSystem& sys,
                                            const MaximalityTable& maximal) {
  const GroundSet& g = sys.ground();
  const std::size_t count = g.subset_count();
  for (Mask v = 1; v < count; ++v) {
    if (!sys.prime(v)) continue;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Mask x = bit(i);
      if (sys.region(v) & x) continue;
      if (!maximal.equivalent_primes[v | x]) continue;
      const auto dv = sys.dimension_of(v);
      const auto dvx = sys.dimension_of(v | x);
      const bool ok = sys.axial(v) && sys.axial(v | x) && dv && dvx &&
                      *dvx == *dv + 1;
      if (!ok) {
        return fail(Proposition::axial_extension,
                    {Subset(g, v), Subset::singleton(g, i)});
      }
    }
  }
  return pass(Proposition::axial_extension);
}

inline PropertyReport check_maximal_heredity(const PhiSystem& sys,
                                             const MaximalityTable& maximal) {
  const std::size_t count = sys.ground().subset_count();
  for (Mask u = 1; u < count; ++u) {
    if (!maximal.equivalent_primes[u]) continue;
    Mask offender = 0;
    any_submask(u, [&](Mask sub) {
      if (sub == 0 || maximal.equivalent_primes[sub]) return false;
      offender = sub;
      return true;
    });
    if (offender != 0) {
      return fail(Proposition::maximal_heredity,
                  {Subset(sys.ground(), u), Subset(sys.ground(), offender)});
    }
  }
  return pass(Proposition::maximal_heredity);
}

inline PropertyReport check_prime_iff_axial(const PhiSystem& sys) {
  const std::size_t count = sys.ground().subset_count();
  for (Mask u = 1; u < count; ++u) {
    if (sys.prime(u) != sys.axial(u)) {
      return fail(Proposition::prime_iff_axial, {Subset(sys.ground(), u)});
    }
  }
  return pass(Proposition::prime_iff_axial);
}

}  // namespace detail

inline PropertyReport check_proposition(const PhiSystem& sys, Proposition which,
                                        const CheckLimits& limits = {}) {
  require_checkable(sys.ground(), limits);
  switch (which) {
    case Proposition::dimension_monotone:
      return detail::check_dimension_pairs(
          sys, which, [](Mask, Mask, int du, int dv) { return dv <= du; });
    case Proposition::dimension_detects_equivalence:
      return detail::check_dimension_pairs(
          sys, which, [&sys](Mask u, Mask v, int du, int dv) {
            return (sys.region(u) == sys.region(v)) == (du == dv);
          });
    case Proposition::prime_reduction:
      return detail::check_prime_reduction(sys);
    case Proposition::axial_extension:
      return detail::check_axial_extension(sys, maximality_table(sys));
    case Proposition::maximal_heredity:
      return detail::check_maximal_heredity(sys, maximality_table(sys));
    case Proposition::prime_iff_axial:
      return detail::check_prime_iff_axial(sys);
  }
  return pass(which);
}

inline std::vector<PropertyReport> check_propositions(
    const PhiSystem& sys, const CheckLimits& limits = {}) {
  require_checkable(sys.ground(), limits);
  const auto maximal = maximality_table(sys);
  return {
      check_proposition(sys, Proposition::dimension_monotone, limits),
      check_proposition(sys, Proposition::dimension_detects_equivalence, limits),
      detail::check_prime_reduction(sys),
      detail::check_axial_extension(sys, maximal),
      detail::check_maximal_heredity(sys, maximal),
      detail::check_prime_iff_axial(sys),
  };
}

}  // namespace phimat

#endif  // PHIMAT_PROPOSITIONS_HPP_
