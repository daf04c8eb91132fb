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

// Command dispatch for the `phimat` tool. Exit codes: 0 every check passed,
// 1 a check failed (the report names the first witness), 2 usage or input
// error.

#ifndef PHIMAT_CLI_HPP_
#define PHIMAT_CLI_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "phimat/axioms.hpp"
#include "phimat/catalog.hpp"
#include "phimat/correspondence.hpp"
#include "phimat/instance_io.hpp"
#include "phimat/matroid.hpp"
#include "phimat/propositions.hpp"
#include "phimat/report.hpp"
#include "phimat/whitehead.hpp"

namespace phimat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::string command;
  std::string file;
  std::string catalog_name;
  std::optional<std::string> set;
  std::size_t max_size = kDefaultCheckSize;
  std::string format = "text";
  std::string emit = "flats";
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string labels_line(const Subset& s) {
  std::string out;
  for (const auto& label : s.labels()) out += (out.empty() ? "" : " ") + label;
  return out;
}

// Matroid files stand for the φ-system whose classes are their flats.
inline PhiSystem as_phi_system(const Instance& inst) {
  if (const auto* sys = std::get_if<PhiSystem>(&inst)) return *sys;
  return PhiSystem(std::get<Matroid>(inst).flats());
}

inline MatroidView matroid_view(const Options& o) {
  return o.emit == "independents" ? MatroidView::independents : MatroidView::flats;
}

inline std::string emit_matroid(const Matroid& m, const Options& o) {
  if (o.emit == "rank") return emit_rank_table(m);
  return emit(m, matroid_view(o));
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int run() {
    if (o_.command == "catalog") return catalog();
    const Instance inst = parse_instance(read_file(o_.file));
    limits_.max_size = o_.max_size;
    if (o_.command == "check") return check(inst);
    if (o_.command == "closure") return closure(inst);
    if (o_.command == "dim") return dim(inst);
    if (o_.command == "primes") return list(inst, false);
    if (o_.command == "axials") return list(inst, true);
    if (o_.command == "to-matroid") return to_matroid(inst);
    if (o_.command == "from-matroid") return from_matroid(inst);
    if (o_.command == "roundtrip") return roundtrip(inst);
    if (o_.command == "props") return props(inst);
    throw Error(ErrorKind::parse_error, "unknown command '" + o_.command + "'");
  }

 private:
  Report report() const { return Report{o_.command, o_.file, {}, std::nullopt}; }

  int finish(const Report& r) {
    if (o_.format == "json") {
      out_ << to_json(r).dump(2) << "\n";
    } else {
      out_ << render_text(r);
    }
    return r.passed() ? kExitPass : kExitFail;
  }

  // Plain values print bare in text mode so scripts can consume them.
  int finish_value(Report r, const std::string& text) {
    if (o_.format == "json") return finish(r);
    out_ << text;
    return kExitPass;
  }

  Subset requested_set(const GroundSet& g) const {
    if (!o_.set) throw Error(ErrorKind::parse_error, "--set is required");
    return Subset::parse(g, *o_.set);
  }

  void check_system(const PhiSystem& sys, Report& r) {
    r.sections.push_back(to_section(check_axioms(sys, limits_)));
    if (!sys.ground().empty()) {
      r.sections.push_back(to_section(is_phi_maximal(sys, Subset::full(sys.ground()))));
    }
    r.sections.push_back(to_section(check_propositions(sys, limits_)));
  }

  // Matroid files get the matroid checks, then their flats as a φ-system.
  int check(const Instance& inst) {
    Report r = report();
    if (const auto* sys = std::get_if<PhiSystem>(&inst)) {
      check_system(*sys, r);
    } else {
      const auto& m = std::get<Matroid>(inst);
      const auto loop_or_pair = simplicity_witness(m);
      ReportSection s{"matroid", {}};
      s.items.push_back({"rank", std::nullopt, {},
                         std::to_string(m.rank(m.ground().full()))});
      s.items.push_back({"flats", std::nullopt, {}, std::to_string(m.flats().size())});
      s.items.push_back({"simple", !loop_or_pair,
                         loop_or_pair ? std::vector<std::vector<std::string>>{loop_or_pair->labels()}
                                      : std::vector<std::vector<std::string>>{},
                         loop_or_pair ? (loop_or_pair->size() == 1 ? "loop" : "parallel pair")
                                      : ""});
      r.sections.push_back(std::move(s));
      r.sections.push_back(to_section(check_closure_axioms(m.closure_table(), limits_)));
      check_system(as_phi_system(inst), r);
    }
    return finish(r);
  }

  int closure(const Instance& inst) {
    Subset result = std::visit(
        [&](const auto& x) -> Subset {
          const Subset u = requested_set(x.ground());
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PhiSystem>) {
            return common_region(x, u);
          } else {
            return phimat::closure(x, u);
          }
        },
        inst);
    Report r = report();
    r.sections.push_back({"closure", {{"closure", std::nullopt, {result.labels()}, *o_.set}}});
    return finish_value(std::move(r), labels_line(result) + "\n");
  }

  int dim(const Instance& inst) {
    std::size_t value = std::visit(
        [&](const auto& x) -> std::size_t {
          const Subset u = requested_set(x.ground());
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PhiSystem>) {
            return dimension(x, u);
          } else {
            return rank(x, u);
          }
        },
        inst);
    Report r = report();
    r.sections.push_back({"dimension", {{"dimension", std::nullopt, {}, std::to_string(value)}}});
    return finish_value(std::move(r), std::to_string(value) + "\n");
  }

  int list(const Instance& inst, bool axial_only) {
    const PhiSystem sys = as_phi_system(inst);
    Report r = report();
    ReportSection s{axial_only ? "axials" : "primes", {}};
    std::string text;
    for (Mask u = 1; u < sys.ground().subset_count(); ++u) {
      if (axial_only ? !sys.axial(u) : !sys.prime(u)) continue;
      const Subset subset(sys.ground(), u);
      s.items.push_back({labels_line(subset), std::nullopt, {subset.labels()}, ""});
      text += labels_line(subset) + "\n";
    }
    r.sections.push_back(std::move(s));
    return finish_value(std::move(r), text);
  }

  template <class F>
  int correspond(F&& body) {
    Report r = report();
    try {
      body(r);
    } catch (const CorrespondenceError& e) {
      r.sections.push_back(to_section(e.report()));
    }
    return finish(r);
  }

  int to_matroid(const Instance& inst) {
    const auto* sys = std::get_if<PhiSystem>(&inst);
    if (!sys) throw Error(ErrorKind::parse_error, "to-matroid needs a phi-system file");
    return correspond([&](Report& r) {
      auto result = whitehead_to_matroid(*sys, limits_);
      r.sections.push_back(to_section(result.report));
      r.output = emit_matroid(result.matroid, o_);
    });
  }

  int from_matroid(const Instance& inst) {
    const auto* m = std::get_if<Matroid>(&inst);
    if (!m) throw Error(ErrorKind::parse_error, "from-matroid needs a matroid file");
    return correspond([&](Report& r) {
      auto result = matroid_to_whitehead(*m, limits_);
      r.sections.push_back(to_section(result.report));
      r.output = emit(result.system);
    });
  }

  int roundtrip(const Instance& inst) {
    return correspond([&](Report& r) {
      if (const auto* sys = std::get_if<PhiSystem>(&inst)) {
        r.sections.push_back(to_section(roundtrip_phi(*sys, limits_)));
      } else {
        r.sections.push_back(to_section(roundtrip_matroid(std::get<Matroid>(inst), limits_)));
      }
    });
  }

  int props(const Instance& inst) {
    Report r = report();
    r.sections.push_back(to_section(check_propositions(as_phi_system(inst), limits_)));
    return finish(r);
  }

  int catalog() {
    if (o_.catalog_name.empty()) {
      std::string text;
      for (const auto& name : catalog_names()) text += name + "\n";
      Report r{"catalog", "", {}, text};
      if (o_.format == "json") return finish(r);
      out_ << text;
      return kExitPass;
    }
    const CatalogEntry entry = catalog_entry(o_.catalog_name);
    const std::vector<std::string> comments{"catalog: " + entry.name, entry.description};
    const std::string text = std::visit(
        [&](const auto& x) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PhiSystem>) {
            return emit(x, comments);
          } else {
            return emit(x, matroid_view(o_), comments);
          }
        },
        entry.payload);
    Report r{"catalog", entry.name, {}, text};
    if (o_.format == "json") return finish(r);
    out_ << text;
    return kExitPass;
  }

  const Options& o_;
  std::ostream& out_;
  CheckLimits limits_;
};

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  Options o;
  CLI::App app{"Whitehead geometrical systems and simple matroids", "phimat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-size", o.max_size, "Ground-size cap for exhaustive checks (<= 12)")
      ->check(CLI::Range(std::size_t{0}, kMaxCheckSize));
  app.add_option("--set", o.set, "Subset as whitespace-separated labels");
  app.add_option("--emit", o.emit, "Matroid output representation")
      ->check(CLI::IsMember({"flats", "independents", "rank"}));

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> file_commands{
      {"check", "axioms, maximality and propositions; matroids add rank, simplicity and closure laws"},
      {"closure", "common region / matroid closure of --set"},
      {"dim", "dimension / rank of --set"},
      {"primes", "list the phi-prime sets"},
      {"axials", "list the phi-axial sets"},
      {"to-matroid", "phi-system -> simple matroid with obligations"},
      {"from-matroid", "simple matroid -> phi-system with obligations"},
      {"roundtrip", "round trip through the other side"},
      {"props", "the dimension-theory propositions"},
  };
  for (const auto& c : file_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "Instance file")->required();
    sub->callback([&o, name = std::string(c.name)] { o.command = name; });
  }
  auto* catalog = app.add_subcommand("catalog", "print a catalog instance (no name: list)");
  catalog->add_option("name", o.catalog_name, "Catalog entry");
  catalog->callback([&o] { o.command = "catalog"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return detail::Runner(o, out).run();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace phimat::cli

#endif  // PHIMAT_CLI_HPP_
