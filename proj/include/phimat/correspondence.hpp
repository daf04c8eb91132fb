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

// Translation between finite φ-maximal geometrical systems and simple
// matroids, in both directions, with every claimed property of the result
// re-checked and recorded as an obligation. Preconditions are checked too and
// appear in the report; nothing is assumed.
//
// whitehead_to_matroid
//   preconditions  nonempty-ground, ground-phi-maximal,
//                  axiom-{lambda,mu,nu-prime,pi,rho}
//   obligations    prime-iff-axial, independence-axioms (independents are
//                  the φ-prime sets plus ∅), closure-is-common-region,
//                  flats-are-intersections, simple, rank-is-dimension
//
// matroid_to_whitehead (φ-classes := flats)
//   preconditions  nonempty-ground, simple
//   obligations    common-region-is-closure, equivalence-is-equal-closure,
//                  prime-iff-independent, dimension-is-rank,
//                  ground-maximal-and-primes-axial, geometrical

#ifndef PHIMAT_CORRESPONDENCE_HPP_
#define PHIMAT_CORRESPONDENCE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phimat/axioms.hpp"
#include "phimat/checks.hpp"
#include "phimat/matroid.hpp"
#include "phimat/propositions.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

enum class Direction { whitehead_to_matroid, matroid_to_whitehead, roundtrip };

constexpr std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::whitehead_to_matroid: return "whitehead-to-matroid";
    case Direction::matroid_to_whitehead: return "matroid-to-whitehead";
    case Direction::roundtrip: return "roundtrip";
  }
  return "?";
}

struct Obligation {
  std::string name;
  bool passed = true;
  std::vector<Subset> witness;
  std::string detail;
};

struct CorrespondenceReport {
  Direction direction;
  std::vector<Obligation> obligations;

  bool passed() const {
    return std::ranges::all_of(obligations, [](const auto& o) { return o.passed; });
  }
  const Obligation* first_failure() const {
    for (const auto& o : obligations) {
      if (!o.passed) return &o;
    }
    return nullptr;
  }
  const Obligation* find(std::string_view name) const {
    for (const auto& o : obligations) {
      if (o.name == name) return &o;
    }
    return nullptr;
  }

  void add(std::string name, bool passed, std::vector<Subset> witness = {},
           std::string detail = {}) {
    obligations.push_back({std::move(name), passed, std::move(witness), std::move(detail)});
  }
};

/// Raised when a precondition or an obligation fails; carries the report
/// accumulated so far.
class CorrespondenceError : public Error {
 public:
  CorrespondenceError(ErrorKind kind, CorrespondenceReport report)
      : Error(kind, describe(report), witness_of(report)),
        report_(std::move(report)) {}

  const CorrespondenceReport& report() const { return report_; }

 private:
  static std::string describe(const CorrespondenceReport& r) {
    const Obligation* f = r.first_failure();
    std::string out = std::string(to_string(r.direction)) + ": " +
                      (f ? f->name : std::string("?")) + " fails";
    if (f) {
      for (const auto& s : f->witness) out += " " + s.to_string();
    }
    return out;
  }
  static std::vector<Subset> witness_of(const CorrespondenceReport& r) {
    const Obligation* f = r.first_failure();
    return f ? f->witness : std::vector<Subset>{};
  }

  CorrespondenceReport report_;
};

struct MatroidFromSystem {
  Matroid matroid;
  CorrespondenceReport report;
};

struct SystemFromMatroid {
  PhiSystem system;
  CorrespondenceReport report;
};

namespace detail {

inline void require_nonempty_ground(const GroundSet& g, CorrespondenceReport& report) {
  report.add("nonempty-ground", !g.empty(), {},
             g.empty() ? "the empty ground set is rejected" : "");
  if (g.empty()) throw CorrespondenceError(ErrorKind::precondition_failed, report);
}

inline void finish_or_throw(const CorrespondenceReport& report) {
  if (!report.passed()) throw CorrespondenceError(ErrorKind::obligation_failed, report);
}

// First subset in canonical order where the two families disagree.
inline std::optional<Subset> family_difference(const SubsetFamily& a,
                                               const SubsetFamily& b) {
  for (Mask u = 0; u < a.ground().subset_count(); ++u) {
    if (a.contains(u) != b.contains(u)) return Subset(a.ground(), u);
  }
  return std::nullopt;
}

inline std::vector<Subset> as_witness(const std::optional<Subset>& s) {
  return s ? std::vector<Subset>{*s} : std::vector<Subset>{};
}

}  // namespace detail

inline MatroidFromSystem whitehead_to_matroid(const PhiSystem& sys,
                                              const CheckLimits& limits = {}) {
  const GroundSet& g = sys.ground();
  CorrespondenceReport report{Direction::whitehead_to_matroid, {}};
  detail::require_nonempty_ground(g, report);

  const Maximality top = is_phi_maximal(sys, Subset::full(g));
  report.add("ground-phi-maximal", top.holds, detail::as_witness(top.witness),
             top.holds ? "" : "phi-prime but not phi-axial");
  const AxiomReport axioms = check_axioms(sys, limits);
  for (const auto& v : axioms.verdicts) {
    report.add("axiom-" + std::string(to_string(v.id)), v.passed, v.witness);
  }
  if (!report.passed()) throw CorrespondenceError(ErrorKind::precondition_failed, report);

  const PropertyReport tau = check_proposition(sys, Proposition::prime_iff_axial, limits);
  report.add("prime-iff-axial", tau.passed, tau.witness);

  const std::size_t count = g.subset_count();
  std::vector<Mask> primes{0};
  for (Mask u = 1; u < count; ++u) {
    if (sys.prime(u)) primes.push_back(u);
  }
  std::optional<Matroid> built;
  try {
    built = Matroid::from_independents(SubsetFamily(g, std::move(primes)));
    report.add("independence-axioms", true);
  } catch (const Error& e) {
    report.add("independence-axioms", false, e.witness(), e.what());
    throw CorrespondenceError(ErrorKind::obligation_failed, report);
  }
  const Matroid& m = *built;

  std::optional<Subset> bad;
  for (Mask u = 0; u < count && !bad; ++u) {
    if (m.closure(u) != sys.region(u)) bad = Subset(g, u);
  }
  report.add("closure-is-common-region", !bad, detail::as_witness(bad));

  bad = detail::family_difference(m.flats(), intersection_closure(sys.classes()));
  report.add("flats-are-intersections", !bad, detail::as_witness(bad));

  bad = simplicity_witness(m);
  report.add("simple", !bad, detail::as_witness(bad));

  bad.reset();
  for (Mask u = 1; u < count && !bad; ++u) {
    const auto dim = sys.dimension_of(u);
    if (!dim || *dim != m.rank(u)) bad = Subset(g, u);
  }
  report.add("rank-is-dimension", !bad, detail::as_witness(bad));

  detail::finish_or_throw(report);
  return {*std::move(built), std::move(report)};
}

inline SystemFromMatroid matroid_to_whitehead(const Matroid& m,
                                              const CheckLimits& limits = {}) {
  const GroundSet& g = m.ground();
  CorrespondenceReport report{Direction::matroid_to_whitehead, {}};
  detail::require_nonempty_ground(g, report);
  const auto loop_or_pair = simplicity_witness(m);
  report.add("simple", !loop_or_pair, detail::as_witness(loop_or_pair),
             loop_or_pair ? (loop_or_pair->size() == 1 ? "loop" : "parallel pair") : "");
  if (loop_or_pair) throw CorrespondenceError(ErrorKind::precondition_failed, report);
  require_checkable(g, limits);

  PhiSystem sys(m.flats());
  const std::size_t count = g.subset_count();

  std::optional<Subset> bad;
  for (Mask u = 0; u < count && !bad; ++u) {
    if (!sys.covered(u) || sys.region(u) != m.closure(u)) bad = Subset(g, u);
  }
  report.add("common-region-is-closure", !bad, detail::as_witness(bad));

  std::vector<Subset> pair;
  for (Mask u = 0; u < count && pair.empty(); ++u) {
    for (Mask v = 0; v < count; ++v) {
      const bool equivalent = sys.region(u) == sys.region(v);
      if (equivalent != (m.closure(u) == m.closure(v))) {
        pair = {Subset(g, u), Subset(g, v)};
        break;
      }
    }
  }
  report.add("equivalence-is-equal-closure", pair.empty(), pair);

  bad.reset();
  for (Mask u = 1; u < count && !bad; ++u) {
    if (sys.prime(u) != m.independent(u)) bad = Subset(g, u);
  }
  report.add("prime-iff-independent", !bad, detail::as_witness(bad));

  bad.reset();
  for (Mask u = 1; u < count && !bad; ++u) {
    const auto dim = sys.dimension_of(u);
    if (!dim || *dim != m.rank(u)) bad = Subset(g, u);
  }
  report.add("dimension-is-rank", !bad, detail::as_witness(bad));

  const Maximality top = is_phi_maximal(sys, Subset::full(g));
  const PropertyReport tau = check_proposition(sys, Proposition::prime_iff_axial, limits);
  std::vector<Subset> five_witness =
      !top.holds ? detail::as_witness(top.witness) : tau.witness;
  report.add("ground-maximal-and-primes-axial", top.holds && tau.passed,
             std::move(five_witness));

  const AxiomReport axioms = check_axioms(sys, limits);
  std::string failed_axiom;
  std::vector<Subset> axiom_witness;
  for (const auto& v : axioms.verdicts) {
    if (!v.passed) {
      failed_axiom = "axiom " + std::string(to_string(v.id)) + " fails";
      axiom_witness = v.witness;
      break;
    }
  }
  report.add("geometrical", axioms.passed(), std::move(axiom_witness), failed_axiom);

  detail::finish_or_throw(report);
  return {std::move(sys), std::move(report)};
}

/// matroid -> φ-system -> matroid; the independent families must agree.
inline CorrespondenceReport roundtrip_matroid(const Matroid& m,
                                              const CheckLimits& limits = {}) {
  CorrespondenceReport report{Direction::roundtrip, {}};
  const auto forward = matroid_to_whitehead(m, limits);
  report.add("matroid-to-whitehead", forward.report.passed());
  const auto back = whitehead_to_matroid(forward.system, limits);
  report.add("whitehead-to-matroid", back.report.passed());

  auto bad = detail::family_difference(m.independents(), back.matroid.independents());
  report.add("independents-equal", !bad, detail::as_witness(bad));
  bad = detail::family_difference(m.flats(), back.matroid.flats());
  report.add("flats-equal", !bad, detail::as_witness(bad));
  return report;
}

/// φ-system -> matroid -> flats as φ-classes; compares intersection
/// closures, since raw φ-families may legitimately differ.
inline CorrespondenceReport roundtrip_phi(const PhiSystem& sys,
                                          const CheckLimits& limits = {}) {
  CorrespondenceReport report{Direction::roundtrip, {}};
  const auto forward = whitehead_to_matroid(sys, limits);
  report.add("whitehead-to-matroid", forward.report.passed());
  const auto back = matroid_to_whitehead(forward.matroid, limits);
  report.add("matroid-to-whitehead", back.report.passed());

  const bool same = same_flat_lattice(sys.classes(), back.system.classes());
  const auto bad = detail::family_difference(intersection_closure(sys.classes()),
                                             intersection_closure(back.system.classes()));
  report.add("same-flat-lattice", same, detail::as_witness(bad));
  return report;
}

}  // namespace phimat

#endif  // PHIMAT_CORRESPONDENCE_HPP_
