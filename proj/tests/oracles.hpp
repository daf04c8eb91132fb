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


// Brute-force oracles for the tests. Each works straight from the
// definitions over plain masks and never touches the library's tables.

#ifndef PHIMAT_TESTS_ORACLES_HPP_
#define PHIMAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "phimat/phimat.hpp"

namespace phimat::oracle {

inline int popcount(Mask m) { return std::popcount(m); }

inline bool sub(Mask a, Mask b) { return (a & b) == a; }

// Intersection of the members containing u, over members ∪ {E}.
inline Mask region(const std::vector<Mask>& members, std::size_t n, Mask u) {
  Mask out = full_mask(n);
  for (Mask c : members) {
    if (sub(u, c)) out &= c;
  }
  return out;
}

// Nonempty, and no proper subset has the same region.
inline bool prime(const std::vector<Mask>& members, std::size_t n, Mask u) {
  if (u == 0) return false;
  const Mask r = region(members, n, u);
  for (Mask v = 0; v < u; ++v) {
    if (sub(v, u) && v != u && region(members, n, v) == r) return false;
  }
  return true;
}

// φ-prime of maximum size among φ-primes with the same region.
inline bool axial(const std::vector<Mask>& members, std::size_t n, Mask u) {
  if (!prime(members, n, u)) return false;
  const Mask r = region(members, n, u);
  for (Mask v = 1; v < (Mask{1} << n); ++v) {
    if (popcount(v) > popcount(u) && prime(members, n, v) &&
        region(members, n, v) == r) {
      return false;
    }
  }
  return true;
}

inline std::vector<Mask> masks_of(const SubsetFamily& f) {
  return {f.masks().begin(), f.masks().end()};
}

// Literal I1, I2, I3 over a family of masks.
inline bool is_matroid(const std::vector<Mask>& fam) {
  auto has = [&](Mask m) { return std::ranges::find(fam, m) != fam.end(); };
  if (!has(0)) return false;
  for (Mask i : fam) {
    for (Mask j = 0; j <= i; ++j) {
      if (sub(j, i) && !has(j)) return false;
    }
  }
  for (Mask a : fam) {
    for (Mask b : fam) {
      if (popcount(a) >= popcount(b)) continue;
      bool extends = false;
      for (Mask x = b & ~a; x != 0; x &= x - 1) {
        if (has(a | (x & -x))) extends = true;
      }
      if (!extends) return false;
    }
  }
  return true;
}

inline int rank(const std::vector<Mask>& independents, Mask u) {
  int best = 0;
  for (Mask i : independents) {
    if (sub(i, u)) best = std::max(best, popcount(i));
  }
  return best;
}

inline bool simple(const std::vector<Mask>& independents, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Mask pair = bit(i) | bit(j);
      if (std::ranges::find(independents, pair) == independents.end()) return false;
    }
  }
  return true;
}

// Every family of subsets of an n-set passing I1-I3, by filtering all
// 2^(2^n) families. n <= 4.
inline std::vector<std::vector<Mask>> all_matroids(std::size_t n) {
  const std::size_t count = subset_count(n);
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << count); ++choice) {
    if (!(choice & 1)) continue;
    std::vector<Mask> fam;
    for (Mask m = 0; m < count; ++m) {
      if (choice >> m & 1) fam.push_back(m);
    }
    if (is_matroid(fam)) out.push_back(std::move(fam));
  }
  return out;
}

inline std::vector<std::vector<Mask>> all_simple_matroids(std::size_t n) {
  std::vector<std::vector<Mask>> out;
  for (auto& fam : all_matroids(n)) {
    if (simple(fam, n)) out.push_back(std::move(fam));
  }
  return out;
}

// Flats from a rank oracle: sets where adding any element raises the rank.
inline std::vector<Mask> flats(const std::vector<Mask>& independents, std::size_t n) {
  std::vector<Mask> out;
  for (Mask u = 0; u < subset_count(n); ++u) {
    bool closed = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(u & bit(i)) && rank(independents, u | bit(i)) == rank(independents, u)) {
        closed = false;
      }
    }
    if (closed) out.push_back(u);
  }
  return out;
}

inline std::size_t count_bases(const std::vector<Mask>& independents) {
  int top = 0;
  for (Mask i : independents) top = std::max(top, popcount(i));
  return static_cast<std::size_t>(std::ranges::count_if(
      independents, [&](Mask i) { return popcount(i) == top; }));
}

// A family of random subsets of an n-set, each kept with probability p.
inline std::vector<Mask> random_family(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Mask> out;
  for (Mask m = 0; m < subset_count(n); ++m) {
    if (keep(rng)) out.push_back(m);
  }
  return out;
}

// A random geometrical-looking family: E, every singleton, random others.
inline std::vector<Mask> random_with_axioms_base(std::mt19937& rng, std::size_t n,
                                                 double p) {
  auto out = random_family(rng, n, p);
  out.push_back(full_mask(n));
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit(i));
  return out;
}

// Region, prime and axial tables from the definitions, plus literal
// readings of maximality, dimension, pi and rho on top of them.
struct Tables {
  std::size_t n;
  std::vector<Mask> members;
  std::vector<Mask> region;
  std::vector<bool> prime;
  std::vector<bool> axial;

  Tables(std::size_t n_, std::vector<Mask> m) : n(n_), members(std::move(m)) {
    for (Mask u = 0; u < subset_count(n); ++u) {
      region.push_back(oracle::region(members, n, u));
    }
    for (Mask u = 0; u < subset_count(n); ++u) {
      bool p = u != 0;
      for (Mask v = 0; v < u && p; ++v) {
        if (sub(v, u) && region[v] == region[u]) p = false;
      }
      prime.push_back(p);
    }
    for (Mask u = 0; u < subset_count(n); ++u) {
      bool a = prime[u];
      for (Mask v = 1; v < subset_count(n) && a; ++v) {
        if (prime[v] && region[v] == region[u] &&
            popcount(v) > popcount(u)) {
          a = false;
        }
      }
      axial.push_back(a);
    }
  }

  bool pi() const {
    for (Mask u = 0; u < subset_count(n); ++u) {
      for (Mask v = 0; v < subset_count(n); ++v) {
        if (!axial[v] || !sub(v, region[u])) continue;
        bool found = false;
        for (Mask w = 0; w < subset_count(n) && !found; ++w) {
          found = axial[v | w] && region[v | w] == region[u];
        }
        if (!found) return false;
      }
    }
    return true;
  }

  bool maximal(Mask u) const {
    for (Mask s = 1; s < subset_count(n); ++s) {
      if (sub(s, u) && prime[s] && region[s] == region[u] && !axial[s]) {
        return false;
      }
    }
    return true;
  }

  // Size of the φ-axial sets equivalent to u; -1 when there are none.
  int dim(Mask u) const {
    for (Mask s = 1; s < subset_count(n); ++s) {
      if (axial[s] && region[s] == region[u]) return popcount(s);
    }
    return -1;
  }

  bool rho() const {
    for (Mask u = 1; u < subset_count(n); ++u) {
      for (Mask v = 1; v < subset_count(n); ++v) {
        if (axial[u] && axial[v] && popcount(u & v) >= 2 && !maximal(u | v)) {
          return false;
        }
      }
    }
    return true;
  }
};

inline PhiSystem system(const GroundSet& g, std::vector<Mask> members) {
  return PhiSystem(SubsetFamily(g, std::move(members)));
}

}  // namespace phimat::oracle

#endif  // PHIMAT_TESTS_ORACLES_HPP_
