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

// Line-oriented instance files.
//
//   # comment (anything after '#' is ignored, blank lines too)
//   kind: phi-system | matroid-independents | matroid-flats
//   elements: <label> <label> ...
//   phi: <labels>            one line per subset; the keyword matches the
//   independent: <labels>    kind, and a bare keyword is the empty set
//   flat: <labels>
//
// Element i of the elements line is bit i. CRLF is accepted on input; output
// is LF-only with a trailing newline, body lines in canonical order.

#ifndef PHIMAT_INSTANCE_IO_HPP_
#define PHIMAT_INSTANCE_IO_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phimat/core_sets.hpp"
#include "phimat/matroid.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

enum class InstanceKind { phi_system, matroid_independents, matroid_flats };

constexpr std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::phi_system: return "phi-system";
    case InstanceKind::matroid_independents: return "matroid-independents";
    case InstanceKind::matroid_flats: return "matroid-flats";
  }
  return "?";
}

constexpr std::string_view body_keyword(InstanceKind k) {
  switch (k) {
    case InstanceKind::phi_system: return "phi";
    case InstanceKind::matroid_independents: return "independent";
    case InstanceKind::matroid_flats: return "flat";
  }
  return "?";
}

/// Syntactic content of an instance file, before any validation.
struct InstanceFile {
  InstanceKind kind;
  SubsetFamily body;
  std::map<Mask, std::size_t> first_line;  // body subset -> 1-based line
  std::size_t kind_line = 0;
};

using Instance = std::variant<PhiSystem, Matroid>;

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + reason,
              {}, line);
}

// Splits "keyword: rest"; nullopt if the line has no colon.
inline std::optional<std::pair<std::string_view, std::string_view>> keyword_line(
    std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{trim(line.substr(0, colon)), line.substr(colon + 1)};
}

}  // namespace detail

inline InstanceFile parse_instance_file(std::string_view text) {
  std::optional<InstanceKind> kind;
  std::optional<GroundSet> ground;
  std::size_t kind_line = 0;
  std::vector<Mask> body;
  std::map<Mask, std::size_t> first_line;

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto parts = detail::keyword_line(line);
    if (!parts) detail::parse_fail(number, "expected 'keyword: ...'");
    const auto [keyword, rest] = *parts;

    if (!kind) {
      if (keyword != "kind") detail::parse_fail(number, "first line must be 'kind: ...'");
      const auto value = detail::trim(rest);
      if (value == "phi-system") kind = InstanceKind::phi_system;
      else if (value == "matroid-independents") kind = InstanceKind::matroid_independents;
      else if (value == "matroid-flats") kind = InstanceKind::matroid_flats;
      else detail::parse_fail(number, "unknown kind '" + std::string(value) + "'");
      kind_line = number;
      continue;
    }
    if (!ground) {
      if (keyword != "elements") detail::parse_fail(number, "second line must be 'elements: ...'");
      std::vector<std::string> labels;
      for (auto w : detail::split_words(rest)) labels.emplace_back(w);
      try {
        ground = GroundSet::from_labels(std::move(labels));
      } catch (const Error& e) {
        detail::parse_fail(number, e.what());
      }
      continue;
    }
    if (keyword != body_keyword(*kind)) {
      detail::parse_fail(number, "expected '" + std::string(body_keyword(*kind)) +
                                     ":' for kind " + std::string(to_string(*kind)));
    }
    Mask bits = 0;
    for (auto w : detail::split_words(rest)) {
      const auto index = ground->find(w);
      if (!index) detail::parse_fail(number, "unknown element '" + std::string(w) + "'");
      if (bits & bit(*index)) detail::parse_fail(number, "repeated element '" + std::string(w) + "'");
      bits |= bit(*index);
    }
    body.push_back(bits);
    first_line.emplace(bits, number);
  }
  if (!kind) detail::parse_fail(number + 1, "missing 'kind:' line");
  if (!ground) detail::parse_fail(number + 1, "missing 'elements:' line");
  return InstanceFile{*kind, SubsetFamily(*ground, std::move(body)), std::move(first_line),
                      kind_line};
}

/// Parses and validates; matroid kinds go through Matroid::from_independents
/// or Matroid::from_flats, and their errors are re-raised with the line of
/// the offending subset when it appears in the file.
inline Instance parse_instance(std::string_view text) {
  InstanceFile file = parse_instance_file(text);
  if (file.kind == InstanceKind::phi_system) return PhiSystem(file.body);
  try {
    return file.kind == InstanceKind::matroid_independents
               ? Matroid::from_independents(file.body)
               : Matroid::from_flats(file.body);
  } catch (const Error& e) {
    std::size_t line = file.kind_line;
    for (const auto& s : e.witness()) {
      if (auto it = file.first_line.find(s.bits()); it != file.first_line.end()) {
        line = it->second;
        break;
      }
    }
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what(), e.witness(), line);
  }
}

/// Canonical text for a family. `comments` become leading '# ' lines.
inline std::string emit_instance(InstanceKind kind, const SubsetFamily& body,
                                 std::span<const std::string> comments = {}) {
  std::string out;
  for (const auto& c : comments) out += c.empty() ? "#\n" : "# " + c + "\n";
  out += "kind: " + std::string(to_string(kind)) + "\n";
  out += "elements:";
  for (const auto& label : body.ground().labels()) out += " " + label;
  out += "\n";
  for (Mask m : body.masks()) {
    out += body_keyword(kind);
    out += ":";
    for (const auto& label : Subset(body.ground(), m).labels()) out += " " + label;
    out += "\n";
  }
  return out;
}

inline std::string emit(const PhiSystem& sys, std::span<const std::string> comments = {}) {
  return emit_instance(InstanceKind::phi_system, sys.classes(), comments);
}

enum class MatroidView { flats, independents };

inline std::string emit(const Matroid& m, MatroidView view,
                        std::span<const std::string> comments = {}) {
  return view == MatroidView::flats
             ? emit_instance(InstanceKind::matroid_flats, m.flats(), comments)
             : emit_instance(InstanceKind::matroid_independents, m.independents(), comments);
}

/// "rank: <labels> = r" for every subset in canonical order.
inline std::string emit_rank_table(const Matroid& m) {
  std::string out;
  for (Mask u = 0; u < m.ground().subset_count(); ++u) {
    out += "rank:";
    for (const auto& label : Subset(m.ground(), u).labels()) out += " " + label;
    out += " = " + std::to_string(m.rank(u)) + "\n";
  }
  return out;
}

}  // namespace phimat

#endif  // PHIMAT_INSTANCE_IO_HPP_
