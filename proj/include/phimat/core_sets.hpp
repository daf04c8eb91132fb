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

// Ground sets, bit-vector subsets and canonically ordered subset families.
//
// Every structure in phimat lives over a GroundSet of at most 16 labelled
// elements. Element i of the ground set is bit i of a Mask, and the canonical
// order on subsets is the numeric order of their masks: the empty set comes
// first, the full set last, and {a,b} < {a,c} < {b,c}.

#ifndef PHIMAT_CORE_SETS_HPP_
#define PHIMAT_CORE_SETS_HPP_

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phimat {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 16;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr Mask full_mask(std::size_t n) { return (Mask{1} << n) - 1; }
constexpr std::size_t subset_count(std::size_t n) { return std::size_t{1} << n; }
constexpr int cardinality(Mask m) { return std::popcount(m); }
constexpr bool is_submask(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls f(s) for every s ⊆ m in increasing (canonical) order, 0 and m included.
template <class F>
constexpr void for_each_submask(Mask m, F&& f) {
  Mask s = 0;
  do {
    f(s);
    s = (s - m) & m;
  } while (s != 0);
}

// Like for_each_submask, but stops as soon as f returns true. Returns whether
// it stopped early.
template <class F>
constexpr bool any_submask(Mask m, F&& f) {
  Mask s = 0;
  do {
    if (f(s)) return true;
    s = (s - m) & m;
  } while (s != 0);
  return false;
}

enum class ErrorKind {
  ground_set_too_large,
  duplicate_label,
  unknown_label,
  mismatched_ground,
  invalid_subset,
  not_a_member,
  no_containing_class,
  empty_input,
  undefined_dimension,
  size_out_of_range,
  axiom_violation,
  not_intersection_closed,
  not_a_matroid,
  flats_mismatch,
  precondition_failed,
  obligation_failed,
  search_exhausted,
  parse_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ground_set_too_large: return "ground-set-too-large";
    case ErrorKind::duplicate_label: return "duplicate-label";
    case ErrorKind::unknown_label: return "unknown-label";
    case ErrorKind::mismatched_ground: return "mismatched-ground";
    case ErrorKind::invalid_subset: return "invalid-subset";
    case ErrorKind::not_a_member: return "not-a-member";
    case ErrorKind::no_containing_class: return "no-containing-class";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::undefined_dimension: return "undefined-dimension";
    case ErrorKind::size_out_of_range: return "size-out-of-range";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::not_intersection_closed: return "not-intersection-closed";
    case ErrorKind::not_a_matroid: return "not-a-matroid";
    case ErrorKind::flats_mismatch: return "flats-mismatch";
    case ErrorKind::precondition_failed: return "precondition-failed";
    case ErrorKind::obligation_failed: return "obligation-failed";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

class Subset;

/// Ordered universe of distinct labels. Copies share identity; two
/// independently built ground sets are never the same ground, even when their
/// labels agree.
class GroundSet {
 public:
  /// The empty ground set (its own identity).
  GroundSet() : data_(std::make_shared<const Data>()) {}

  static GroundSet from_labels(std::vector<std::string> labels);

  /// Ground of n elements labelled "a", "b", ... in order.
  static GroundSet lettered(std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return data_->labels.empty(); }
  Mask full() const { return full_mask(size()); }
  std::size_t subset_count() const { return phimat::subset_count(size()); }

  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  std::optional<std::size_t> find(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  bool contains_mask(Mask m) const { return is_submask(m, full()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.data_ == b.data_;
  }

  /// Whether the two grounds list the same labels in the same order.
  bool same_labels(const GroundSet& other) const {
    return labels() == other.labels();
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  explicit GroundSet(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// A subset of a particular GroundSet, stored as its characteristic bits.
class Subset {
 public:
  Subset(GroundSet ground, Mask bits);

  static Subset empty(const GroundSet& g) { return Subset(g, 0); }
  static Subset full(const GroundSet& g) { return Subset(g, g.full()); }
  static Subset singleton(const GroundSet& g, std::size_t i);
  static Subset of_labels(const GroundSet& g,
                          std::span<const std::string> labels);
  /// Whitespace-separated labels, e.g. "a b c".
  static Subset parse(const GroundSet& g, std::string_view labels);

  const GroundSet& ground() const { return ground_; }
  Mask bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(cardinality(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t i) const { return i < 32 && (bits_ & bit(i)) != 0; }

  bool is_subset_of(const Subset& other) const;

  std::vector<std::string> labels() const;
  /// "{a, b}" style rendering; "{}" for the empty set.
  std::string to_string() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);

  /// Subsets of different grounds are never equal.
  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ground_ == b.ground_ && a.bits_ == b.bits_;
  }
  /// Canonical order. Throws mismatched-ground across grounds.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  GroundSet ground_;
  Mask bits_;
};

/// Library error. `witness` holds the subsets that demonstrate the failure
/// when there are any; `line` is set for errors tied to an input file line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<Subset> witness = {},
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)),
        line_(line) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<Subset>& witness() const { return witness_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorKind kind_;
  std::vector<Subset> witness_;
  std::optional<std::size_t> line_;
};

inline GroundSet GroundSet::from_labels(std::vector<std::string> labels) {
  if (labels.size() > kMaxGroundSize) {
    throw Error(ErrorKind::ground_set_too_large,
                std::to_string(labels.size()) + " elements, at most " +
                    std::to_string(kMaxGroundSize) + " supported");
  }
  Data data;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw Error(ErrorKind::invalid_subset, "empty element label");
    }
    if (!data.index.emplace(labels[i], i).second) {
      throw Error(ErrorKind::duplicate_label, "label '" + labels[i] + "'");
    }
  }
  data.labels = std::move(labels);
  return GroundSet(std::make_shared<const Data>(std::move(data)));
}

inline GroundSet GroundSet::lettered(std::size_t n) {
  if (n > kMaxGroundSize) {
    throw Error(ErrorKind::ground_set_too_large,
                std::to_string(n) + " elements, at most " +
                    std::to_string(kMaxGroundSize) + " supported");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.emplace_back(1, static_cast<char>('a' + i));
  }
  return from_labels(std::move(labels));
}

inline Subset::Subset(GroundSet ground, Mask bits)
    : ground_(std::move(ground)), bits_(bits) {
  if (!ground_.contains_mask(bits_)) {
    throw Error(ErrorKind::invalid_subset,
                "bits outside a ground set of size " +
                    std::to_string(ground_.size()));
  }
}

inline Subset Subset::singleton(const GroundSet& g, std::size_t i) {
  if (i >= g.size()) {
    throw Error(ErrorKind::invalid_subset, "element index out of range");
  }
  return Subset(g, bit(i));
}

inline Subset Subset::of_labels(const GroundSet& g,
                                std::span<const std::string> labels) {
  Mask bits = 0;
  for (const auto& label : labels) {
    auto index = g.find(label);
    if (!index) throw Error(ErrorKind::unknown_label, "label '" + label + "'");
    bits |= bit(*index);
  }
  return Subset(g, bits);
}

inline Subset Subset::parse(const GroundSet& g, std::string_view text) {
  std::vector<std::string> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) labels.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  return of_labels(g, labels);
}

inline bool Subset::is_subset_of(const Subset& other) const {
  if (!(ground_ == other.ground_)) {
    throw Error(ErrorKind::mismatched_ground, "subset comparison");
  }
  return is_submask(bits_, other.bits_);
}

inline std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (bits_ & bit(i)) out.push_back(ground_.label(i));
  }
  return out;
}

inline std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels()) {
    if (!first) out += ", ";
    out += label;
    first = false;
  }
  return out + "}";
}

namespace detail {
inline const GroundSet& common_ground(const Subset& a, const Subset& b) {
  if (!(a.ground() == b.ground())) {
    throw Error(ErrorKind::mismatched_ground, "subset operation");
  }
  return a.ground();
}
}  // namespace detail

inline Subset operator|(const Subset& a, const Subset& b) {
  return Subset(detail::common_ground(a, b), a.bits_ | b.bits_);
}
inline Subset operator&(const Subset& a, const Subset& b) {
  return Subset(detail::common_ground(a, b), a.bits_ & b.bits_);
}
inline Subset operator-(const Subset& a, const Subset& b) {
  return Subset(detail::common_ground(a, b), a.bits_ & ~b.bits_);
}
inline std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  detail::common_ground(a, b);
  return a.bits_ <=> b.bits_;
}

/// Deduplicated family of subsets of one ground, held in canonical order.
class SubsetFamily {
 public:
  explicit SubsetFamily(GroundSet ground, std::vector<Mask> members = {})
      : ground_(std::move(ground)), members_(std::move(members)) {
    for (Mask m : members_) {
      if (!ground_.contains_mask(m)) {
        throw Error(ErrorKind::invalid_subset, "family member outside ground");
      }
    }
    std::ranges::sort(members_);
    auto dup = std::ranges::unique(members_);
    members_.erase(dup.begin(), dup.end());
  }

  static SubsetFamily of(const GroundSet& ground,
                         std::span<const Subset> members) {
    std::vector<Mask> masks;
    masks.reserve(members.size());
    for (const auto& s : members) {
      if (!(s.ground() == ground)) {
        throw Error(ErrorKind::mismatched_ground, "family member");
      }
      masks.push_back(s.bits());
    }
    return SubsetFamily(ground, std::move(masks));
  }

  /// Every subset of the ground.
  static SubsetFamily power_set(const GroundSet& ground) {
    std::vector<Mask> masks(ground.subset_count());
    for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<Mask>(m);
    return SubsetFamily(ground, std::move(masks));
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> masks() const { return members_; }
  Subset operator[](std::size_t i) const { return Subset(ground_, members_.at(i)); }

  std::vector<Subset> members() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (Mask m : members_) out.emplace_back(ground_, m);
    return out;
  }

  bool contains(Mask m) const { return std::ranges::binary_search(members_, m); }
  bool contains(const Subset& s) const {
    return s.ground() == ground_ && contains(s.bits());
  }

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

/// All 2^n subsets of g in canonical order, from the empty set to g itself.
/// GroundSet already caps n at kMaxGroundSize.
inline auto enumerate_subsets(const GroundSet& g) {
  return std::views::iota(Mask{0}, static_cast<Mask>(g.subset_count())) |
         std::views::transform([g](Mask m) { return Subset(g, m); });
}

/// Intersection of the members of f accepted by `selected`; the full ground
/// when nothing is selected.
template <std::predicate<const Subset&> Pred>
Subset intersect_family(const SubsetFamily& f, Pred&& selected) {
  Mask out = f.ground().full();
  for (Mask m : f.masks()) {
    if (selected(Subset(f.ground(), m))) out &= m;
  }
  return Subset(f.ground(), out);
}

/// Intersection over a sub-family of f (every member of `selection` must be a
/// member of f).
inline Subset intersect_family(const SubsetFamily& f,
                               const SubsetFamily& selection) {
  if (!(f.ground() == selection.ground())) {
    throw Error(ErrorKind::mismatched_ground, "family subselection");
  }
  Mask out = f.ground().full();
  for (Mask m : selection.masks()) {
    if (!f.contains(m)) {
      throw Error(ErrorKind::not_a_member, "selection is not a sub-family",
                  {Subset(f.ground(), m)});
    }
    out &= m;
  }
  return Subset(f.ground(), out);
}

/// For every mask u over n elements: the intersection of the members
/// containing u (the full set when none does), and whether some member
/// contains u. Superset-sum transform, O(n 2^n).
struct IntersectionTable {
  std::vector<Mask> region;
  std::vector<std::uint8_t> covered;
};

inline IntersectionTable intersect_over_supersets(std::size_t n,
                                                  std::span<const Mask> members) {
  const std::size_t count = subset_count(n);
  IntersectionTable t{std::vector<Mask>(count, full_mask(n)),
                      std::vector<std::uint8_t>(count, 0)};
  for (Mask c : members) {
    t.region[c] &= c;
    t.covered[c] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < count; ++m) {
      if (m & bit(i)) continue;
      const std::size_t up = m | bit(i);
      t.region[m] &= t.region[up];
      t.covered[m] |= t.covered[up];
    }
  }
  return t;
}

}  // namespace phimat

#endif  // PHIMAT_CORE_SETS_HPP_
