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

// Named instances: free systems, uniform matroids, the Fano plane, the cycle
// matroid of K4 and a searched-for geometrical system that is not φ-maximal.

#ifndef PHIMAT_CATALOG_HPP_
#define PHIMAT_CATALOG_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phimat/axioms.hpp"
#include "phimat/matroid.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

/// Every subset of an n-element ground is a φ-class.
inline PhiSystem free_system(std::size_t n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorKind::size_out_of_range,
                "free_system needs 1 <= n <= 16, got " + std::to_string(n));
  }
  return PhiSystem(SubsetFamily::power_set(GroundSet::lettered(n)));
}

/// U_{r,n}: independent sets are the subsets of size at most r.
inline Matroid uniform(std::size_t r, std::size_t n) {
  if (r > n || n > kMaxGroundSize) {
    throw Error(ErrorKind::size_out_of_range,
                "uniform needs 0 <= r <= n <= 16, got r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
  }
  const GroundSet g = GroundSet::lettered(n);
  std::vector<Mask> small;
  for (Mask u = 0; u < g.subset_count(); ++u) {
    if (static_cast<std::size_t>(cardinality(u)) <= r) small.push_back(u);
  }
  return Matroid::from_independents(SubsetFamily(g, std::move(small)));
}

inline constexpr std::array<std::array<std::size_t, 3>, 7> kFanoLines{{
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
}};

/// PG(2,2) on points 1..7. Flats: ∅, the points, the seven lines, E.
inline Matroid fano() {
  const GroundSet g = GroundSet::from_labels({"1", "2", "3", "4", "5", "6", "7"});
  std::vector<Mask> flats{0, g.full()};
  for (std::size_t i = 0; i < 7; ++i) flats.push_back(bit(i));
  for (const auto& line : kFanoLines) {
    flats.push_back(bit(line[0]) | bit(line[1]) | bit(line[2]));
  }
  return Matroid::from_flats(SubsetFamily(g, std::move(flats)));
}

/// Cycle matroid of the complete graph on vertices 1..4; element "ij" is the
/// edge between i and j, independent sets are the forests.
inline Matroid graphic_k4() {
  const std::array<std::array<int, 2>, 6> edges{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(std::to_string(e[0]) + std::to_string(e[1]));
  const GroundSet g = GroundSet::from_labels(std::move(labels));

  std::vector<Mask> forests;
  for (Mask u = 0; u < g.subset_count(); ++u) {
    std::array<int, 5> parent{0, 1, 2, 3, 4};
    auto root = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!(u & bit(i))) continue;
      const int a = root(edges[i][0]);
      const int b = root(edges[i][1]);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) forests.push_back(u);
  }
  return Matroid::from_independents(SubsetFamily(g, std::move(forests)));
}

/// Result of the search for a geometrical system that is not φ-maximal.
///
/// Candidates on n = 2, 3, ... elements are {E} ∪ singletons ∪ C, where C is
/// any choice among the subsets of size 2..n-1; the choices are numbered by
/// treating C as a bit string over those subsets in canonical order, and are
/// tried in increasing number. The first candidate that passes lambda, mu,
/// nu-prime and pi while having a φ-prime set that is not φ-axial is
/// returned.
struct NonMaximalSearch {
  PhiSystem system;
  std::size_t ground_size;
  std::uint64_t choice;       // number of the accepted choice C
  std::uint64_t examined;     // candidates examined, over all sizes
  Subset witness;             // first φ-prime, non-φ-axial set
  AxiomReport axioms;
};

inline NonMaximalSearch find_non_maximal_example(std::size_t max_ground = 5) {
  if (max_ground > 5) {
    throw Error(ErrorKind::size_out_of_range,
                "the search enumerates 2^(2^n - n - 2) families; n <= 5 supported");
  }
  std::uint64_t examined = 0;
  for (std::size_t n = 2; n <= max_ground; ++n) {
    const GroundSet g = GroundSet::lettered(n);
    std::vector<Mask> base{g.full()};
    std::vector<Mask> optional_classes;
    for (std::size_t i = 0; i < n; ++i) base.push_back(bit(i));
    for (Mask u = 0; u < g.subset_count(); ++u) {
      const int k = cardinality(u);
      if (k >= 2 && k + 1 <= static_cast<int>(n)) optional_classes.push_back(u);
    }
    const std::uint64_t choices = std::uint64_t{1} << optional_classes.size();
    for (std::uint64_t choice = 0; choice < choices; ++choice) {
      ++examined;
      std::vector<Mask> classes = base;
      for (std::size_t k = 0; k < optional_classes.size(); ++k) {
        if (choice >> k & 1) classes.push_back(optional_classes[k]);
      }
      PhiSystem sys(SubsetFamily(g, std::move(classes)));
      Mask witness = 0;
      for (Mask u = 1; u < g.subset_count() && witness == 0; ++u) {
        if (sys.prime(u) && !sys.axial(u)) witness = u;
      }
      if (witness == 0) continue;
      AxiomReport axioms = check_axioms(sys);
      if (!axioms[Axiom::lambda] || !axioms[Axiom::mu] ||
          !axioms[Axiom::nu_prime] || !axioms[Axiom::pi]) {
        continue;
      }
      Subset w(g, witness);
      return {std::move(sys), n, choice, examined, std::move(w), std::move(axioms)};
    }
  }
  throw Error(ErrorKind::search_exhausted,
              "no geometrical non-maximal system with at most " +
                  std::to_string(max_ground) + " elements");
}

inline PhiSystem non_maximal_example() { return find_non_maximal_example().system; }

using CatalogPayload = std::variant<PhiSystem, Matroid>;

struct CatalogEntry {
  std::string name;
  std::string description;
  CatalogPayload payload;
  /// Named expected values, re-derived by the generic checkers in tests.
  std::map<std::string, long long> expected;
};

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "free-1", "free-3", "free-5", "uniform-1-2", "uniform-2-4",
      "uniform-3-5", "fano", "k4", "nonmax"};
  return names;
}

inline CatalogEntry catalog_entry(std::string_view name) {
  if (name == "free-1" || name == "free-3" || name == "free-5") {
    const std::size_t n = static_cast<std::size_t>(name.back() - '0');
    return {std::string(name), "every subset is a phi-class", free_system(n),
            {{"classes", 1LL << n}, {"dimension", static_cast<long long>(n)},
             {"axioms", 1}, {"maximal", 1}}};
  }
  if (name == "uniform-1-2") {
    return {"uniform-1-2", "U(1,2): a parallel pair", uniform(1, 2),
            {{"rank", 1}, {"flats", 2}, {"simple", 0}}};
  }
  if (name == "uniform-2-4") {
    return {"uniform-2-4", "U(2,4): four points on a line", uniform(2, 4),
            {{"rank", 2}, {"flats", 6}, {"bases", 6}, {"simple", 1}}};
  }
  if (name == "uniform-3-5") {
    return {"uniform-3-5", "U(3,5): five points in general position in a plane",
            uniform(3, 5), {{"rank", 3}, {"flats", 17}, {"bases", 10}, {"simple", 1}}};
  }
  if (name == "fano") {
    return {"fano", "Fano plane PG(2,2)", fano(),
            {{"rank", 3}, {"flats", 16}, {"bases", 28}, {"simple", 1}}};
  }
  if (name == "k4") {
    return {"k4", "cycle matroid of the complete graph K4", graphic_k4(),
            {{"rank", 3}, {"flats", 15}, {"bases", 16}, {"simple", 1}}};
  }
  if (name == "nonmax") {
    auto found = find_non_maximal_example();
    std::string description =
        "first geometrical system (lambda, mu, nu-prime, pi) with a phi-prime, "
        "non-phi-axial set; candidates {E} + singletons + any choice of "
        "subsets of size 2..n-1, choices numbered in canonical order; found at "
        "n=" + std::to_string(found.ground_size) + ", choice " +
        std::to_string(found.choice) + ", witness " + found.witness.to_string();
    return {"nonmax", std::move(description), std::move(found.system),
            {{"ground", static_cast<long long>(found.ground_size)},
             {"choice", static_cast<long long>(found.choice)},
             {"dimension", 3}, {"witness-size", 2}, {"maximal", 0}}};
  }
  throw Error(ErrorKind::not_a_member, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace phimat

#endif  // PHIMAT_CATALOG_HPP_
