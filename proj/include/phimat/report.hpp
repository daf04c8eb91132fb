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

// Uniform report document rendered by the command-line tool, as plain text or
// JSON. JSON layout (all keys required):
//
//   {
//     "command":  string,
//     "input":    string,
//     "passed":   bool,            // every item with a verdict passed
//     "sections": [ { "title": string,
//                     "items": [ { "name":    string,
//                                  "passed":  bool | null,   // null = value
//                                  "witness": [[label, ...], ...],
//                                  "detail":  string } ] } ],
//     "output":   string | null    // emitted instance text, if any
//   }

#ifndef PHIMAT_REPORT_HPP_
#define PHIMAT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "phimat/axioms.hpp"
#include "phimat/correspondence.hpp"
#include "phimat/matroid.hpp"
#include "phimat/propositions.hpp"
#include "phimat/whitehead.hpp"

namespace phimat {

struct ReportItem {
  std::string name;
  std::optional<bool> passed;
  std::vector<std::vector<std::string>> witness;
  std::string detail;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct ReportSection {
  std::string title;
  std::vector<ReportItem> items;

  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

struct Report {
  std::string command;
  std::string input;
  std::vector<ReportSection> sections;
  std::optional<std::string> output;

  bool passed() const {
    for (const auto& s : sections) {
      for (const auto& i : s.items) {
        if (i.passed && !*i.passed) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {
inline std::vector<std::vector<std::string>> witness_labels(const std::vector<Subset>& w) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : w) out.push_back(s.labels());
  return out;
}
}  // namespace detail

template <class Id>
ReportItem to_item(const Verdict<Id>& v) {
  return {std::string(to_string(v.id)), v.passed, detail::witness_labels(v.witness), ""};
}

inline ReportSection to_section(const AxiomReport& r) {
  ReportSection s{"axioms", {}};
  for (const auto& v : r.verdicts) s.items.push_back(to_item(v));
  return s;
}

inline ReportSection to_section(const std::vector<PropertyReport>& r) {
  ReportSection s{"propositions", {}};
  for (const auto& v : r) s.items.push_back(to_item(v));
  return s;
}

inline ReportSection to_section(const ClosureAxiomReport& r) {
  ReportSection s{"closure-laws", {}};
  for (const auto& v : r.laws) s.items.push_back(to_item(v));
  return s;
}

inline ReportSection to_section(const Maximality& m) {
  auto witness = [](const std::optional<Subset>& w) {
    return w ? std::vector<std::vector<std::string>>{w->labels()}
             : std::vector<std::vector<std::string>>{};
  };
  ReportSection s{"maximality", {}};
  s.items.push_back({"ground-phi-maximal", m.holds, witness(m.witness),
                     m.holds ? "" : "phi-prime, phi-equivalent, not phi-axial"});
  s.items.push_back({"ground-phi-maximal-all-primes", m.holds_for_all_primes,
                     witness(m.witness_for_all_primes),
                     m.holds_for_all_primes ? "" : "phi-prime, not phi-axial"});
  return s;
}

inline ReportSection to_section(const CorrespondenceReport& r) {
  ReportSection s{std::string(to_string(r.direction)), {}};
  for (const auto& o : r.obligations) {
    s.items.push_back({o.name, o.passed, detail::witness_labels(o.witness), o.detail});
  }
  return s;
}

namespace detail {
inline std::string render_witness(const std::vector<std::vector<std::string>>& w) {
  std::string out;
  for (const auto& labels : w) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
    out += "}";
  }
  return out;
}
}  // namespace detail

inline std::string render_text(const Report& r) {
  std::string out = "command: " + r.command + "\n";
  if (!r.input.empty()) out += "input: " + r.input + "\n";
  for (const auto& s : r.sections) {
    out += "[" + s.title + "]\n";
    for (const auto& i : s.items) {
      std::string line = "  " + i.name;
      if (line.size() < 36) line.resize(36, ' ');
      else line += " ";
      if (i.passed) line += *i.passed ? "pass" : "FAIL";
      if (!i.witness.empty()) line += "  witness: " + detail::render_witness(i.witness);
      if (!i.detail.empty()) line += (i.passed ? "  (" + i.detail + ")" : i.detail);
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
  }
  out += std::string("result: ") + (r.passed() ? "pass" : "FAIL") + "\n";
  if (r.output) out += "\n" + *r.output;
  return out;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& s : r.sections) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : s.items) {
      items.push_back({{"name", i.name},
                       {"passed", i.passed ? nlohmann::json(*i.passed) : nlohmann::json()},
                       {"witness", i.witness},
                       {"detail", i.detail}});
    }
    sections.push_back({{"title", s.title}, {"items", std::move(items)}});
  }
  return {{"command", r.command},
          {"input", r.input},
          {"passed", r.passed()},
          {"sections", std::move(sections)},
          {"output", r.output ? nlohmann::json(*r.output) : nlohmann::json()}};
}

/// Validates a document against the layout above and rebuilds the Report.
/// Throws parse-error on any schema violation, including a "passed" flag that
/// disagrees with the items.
inline Report report_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& why) -> Error {
    return Error(ErrorKind::parse_error, "report json: " + why);
  };
  auto string_field = [&](const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_string()) {
      throw bad(std::string("'") + key + "' must be a string");
    }
    return obj.at(key).get<std::string>();
  };
  auto array_field = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
    if (!obj.contains(key) || !obj.at(key).is_array()) {
      throw bad(std::string("'") + key + "' must be an array");
    }
    return obj.at(key);
  };

  Report r{string_field(j, "command"), string_field(j, "input"), {}, std::nullopt};
  if (!j.contains("passed") || !j.at("passed").is_boolean()) throw bad("'passed' must be a bool");
  if (!j.contains("output") || !(j.at("output").is_null() || j.at("output").is_string())) {
    throw bad("'output' must be a string or null");
  }
  if (j.at("output").is_string()) r.output = j.at("output").get<std::string>();

  for (const auto& s : array_field(j, "sections")) {
    ReportSection section{string_field(s, "title"), {}};
    for (const auto& i : array_field(s, "items")) {
      ReportItem item{string_field(i, "name"), std::nullopt, {}, string_field(i, "detail")};
      if (!i.contains("passed") || !(i.at("passed").is_null() || i.at("passed").is_boolean())) {
        throw bad("item 'passed' must be a bool or null");
      }
      if (i.at("passed").is_boolean()) item.passed = i.at("passed").get<bool>();
      for (const auto& w : array_field(i, "witness")) {
        if (!w.is_array()) throw bad("witness entries must be label arrays");
        std::vector<std::string> labels;
        for (const auto& label : w) {
          if (!label.is_string()) throw bad("labels must be strings");
          labels.push_back(label.get<std::string>());
        }
        item.witness.push_back(std::move(labels));
      }
      section.items.push_back(std::move(item));
    }
    r.sections.push_back(std::move(section));
  }
  if (j.at("passed").get<bool>() != r.passed()) throw bad("'passed' disagrees with items");
  return r;
}

}  // namespace phimat

#endif  // PHIMAT_REPORT_HPP_
