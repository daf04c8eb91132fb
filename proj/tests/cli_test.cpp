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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"
#include "phimat/cli.hpp"
#include "phimat/phimat.hpp"
#include "phimat/report.hpp"

namespace phimat {
namespace {

namespace fs = std::filesystem;

std::string golden_path(const std::string& name) {
  return std::string(PHIMAT_GOLDEN_DIR) + "/" + name + ".txt";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("phimat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  fs::path dir_;
};

Error parse_error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return Error(ErrorKind::parse_error, "none");
}

TEST(ParseInstance, FreeSystemOnTwo) {
  const auto inst = parse_instance("kind: phi-system\nelements: a b\nphi:\nphi: a\nphi: b\nphi: a b\n");
  const auto& sys = std::get<PhiSystem>(inst);
  EXPECT_EQ(oracle::masks_of(sys.classes()), oracle::masks_of(free_system(2).classes()));
  EXPECT_EQ(sys.ground().labels(), free_system(2).ground().labels());
}

TEST(ParseInstance, FlatsOfParallelPair) {
  const auto inst = parse_instance("kind: matroid-flats\nelements: a b\nflat:\nflat: a b\n");
  const auto& m = std::get<Matroid>(inst);
  EXPECT_EQ(oracle::masks_of(m.independents()), (std::vector<Mask>{0, 1, 2}));
  EXPECT_FALSE(is_simple(m));
}

TEST(ParseInstance, DuplicateLabel) {
  const auto e = parse_error_of("kind: phi-system\nelements: a a\n");
  EXPECT_EQ(e.kind(), ErrorKind::parse_error);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
}

TEST(ParseInstance, ElementsBeforeKind) {
  const auto e = parse_error_of("elements: a a\n");
  EXPECT_EQ(e.kind(), ErrorKind::parse_error);
  EXPECT_EQ(e.line(), 1u);
}

TEST(ParseInstance, Malformed) {
  EXPECT_EQ(parse_error_of("kind: lattice\n").line(), 1u);
  EXPECT_EQ(parse_error_of("kind: phi-system\nelements: a\nphi: b\n").line(), 3u);
  EXPECT_EQ(parse_error_of("kind: phi-system\nelements: a\nflat: a\n").line(), 3u);
  EXPECT_EQ(parse_error_of("kind: phi-system\nelements: a b\nphi: a a\n").line(), 3u);
  EXPECT_EQ(parse_error_of("kind: phi-system\n# nothing\nelements a\n").line(), 3u);
  EXPECT_EQ(parse_error_of("kind: phi-system\n").kind(), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_of("").kind(), ErrorKind::parse_error);
}

TEST(ParseInstance, ValidationErrorsCarryTheLine) {
  const auto e = parse_error_of(
      "kind: matroid-independents\nelements: a b\nindependent:\nindependent: a b\n");
  EXPECT_EQ(e.kind(), ErrorKind::axiom_violation);
  EXPECT_EQ(e.line(), 4u);
  EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);

  const auto f = parse_error_of("kind: matroid-flats\nelements: a b c\nflat: a b\nflat: b c\nflat: a b c\n");
  EXPECT_EQ(f.kind(), ErrorKind::not_intersection_closed);
  EXPECT_EQ(f.line(), 3u);
}

TEST(ParseInstance, LineEndingsAndComments) {
  const std::string lf = "kind: phi-system\nelements: a b\nphi: a\nphi: b\nphi: a b\n";
  const std::string crlf = "kind: phi-system\r\nelements: a b\r\nphi: a\r\nphi: b\r\nphi: a b\r\n";
  const std::string bare = "kind: phi-system\nelements: a b\nphi: a\nphi: b\nphi: a b";
  const std::string noisy = "# header\n\nkind: phi-system   # trailing\n  elements:  a   b\n"
                            "phi: b a\nphi: a\nphi: b\nphi: b\n";
  const auto expected = emit(std::get<PhiSystem>(parse_instance(lf)));
  for (const auto& text : {crlf, bare, noisy}) {
    EXPECT_EQ(emit(std::get<PhiSystem>(parse_instance(text))), expected);
  }
  EXPECT_EQ(expected, lf);
}

TEST(Golden, ParseEmitIdentityOnEveryCatalogFile) {
  for (const auto& name : catalog_names()) {
    const auto text = slurp(golden_path(name));
    ASSERT_FALSE(text.empty()) << name;
    const auto file = parse_instance_file(text);
    std::vector<std::string> comments;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line) && line.starts_with("# ");) {
      comments.push_back(line.substr(2));
    }
    EXPECT_EQ(emit_instance(file.kind, file.body, comments), text) << name;

    // Semantic: the parsed instance equals the catalog payload.
    const auto inst = parse_instance(text);
    const auto entry = catalog_entry(name);
    std::visit(
        [&](const auto& parsed) {
          using T = std::decay_t<decltype(parsed)>;
          const auto& want = std::get<T>(entry.payload);
          EXPECT_EQ(parsed.ground().labels(), want.ground().labels()) << name;
          if constexpr (std::is_same_v<T, PhiSystem>) {
            EXPECT_EQ(oracle::masks_of(parsed.classes()), oracle::masks_of(want.classes()));
          } else {
            EXPECT_EQ(oracle::masks_of(parsed.independents()),
                      oracle::masks_of(want.independents()));
          }
        },
        inst);
  }
}

TEST(Golden, CatalogCommandReproducesTheFiles) {
  for (const auto& name : catalog_names()) {
    const auto r = run({"catalog", name});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(golden_path(name))) << name;
  }
}

TEST(Emit, MatroidViewsAndRankTable) {
  const auto m = uniform(1, 2);
  EXPECT_EQ(emit(m, MatroidView::flats), "kind: matroid-flats\nelements: a b\nflat:\nflat: a b\n");
  EXPECT_EQ(emit(m, MatroidView::independents),
            "kind: matroid-independents\nelements: a b\nindependent:\nindependent: a\n"
            "independent: b\n");
  EXPECT_EQ(emit_rank_table(m), "rank: = 0\nrank: a = 1\nrank: b = 1\nrank: a b = 1\n");
  const auto back = parse_instance(emit(m, MatroidView::independents));
  EXPECT_EQ(oracle::masks_of(std::get<Matroid>(back).independents()),
            oracle::masks_of(m.independents()));
}

TEST(Cli, CheckFanoPasses) {
  const auto r = run({"check", golden_path("fano")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  for (const char* axiom : {"lambda", "mu", "nu-prime", "pi", "rho"}) {
    EXPECT_NE(r.out.find(std::string("  ") + axiom), std::string::npos) << axiom;
  }
  EXPECT_NE(r.out.find("ground-phi-maximal"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(Cli, ToMatroidOnNonMaximalFailsWithWitness) {
  const auto r = run({"to-matroid", golden_path("nonmax")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ground-phi-maximal"), std::string::npos);
  EXPECT_NE(r.out.find("witness: {c, d}"), std::string::npos);
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST(Cli, ClosureAndDimensionPrintBareValues) {
  auto r = run({"closure", golden_path("uniform-2-4"), "--set", "a b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a b c d\n");
  r = run({"closure", golden_path("free-3"), "--set", "a c"});
  EXPECT_EQ(r.out, "a c\n");
  r = run({"dim", golden_path("fano"), "--set", "1 2 3"});
  EXPECT_EQ(r.out, "2\n");
  r = run({"dim", golden_path("free-5"), "--set=a b c d e"});
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, PrimesAndAxials) {
  auto r = run({"axials", golden_path("nonmax")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("c d\n"), std::string::npos);
  r = run({"primes", golden_path("nonmax")});
  EXPECT_NE(r.out.find("\nc d\n"), std::string::npos);
  r = run({"primes", golden_path("uniform-2-4")});
  EXPECT_EQ(r.out, "a\nb\na b\nc\na c\nb c\nd\na d\nb d\nc d\n");
}

TEST(Cli, FromMatroidAndRoundtrip) {
  auto r = run({"from-matroid", golden_path("k4")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("kind: phi-system"), std::string::npos);
  r = run({"roundtrip", golden_path("k4")});
  EXPECT_EQ(r.code, 0);
  r = run({"roundtrip", golden_path("free-3")});
  EXPECT_EQ(r.code, 0);
  r = run({"from-matroid", golden_path("uniform-1-2")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("parallel pair"), std::string::npos);
  r = run({"to-matroid", golden_path("free-3"), "--emit", "rank"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rank: a b c = 3\n"), std::string::npos);
}

TEST(Cli, PropsOnNonMaximal) {
  const auto r = run({"props", golden_path("nonmax")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("prime-iff-axial"), std::string::npos);
}

TEST(Cli, CatalogListing) {
  const auto r = run({"catalog"});
  EXPECT_EQ(r.code, 0);
  std::string expected;
  for (const auto& n : catalog_names()) expected += n + "\n";
  EXPECT_EQ(r.out, expected);
}

TEST_F(TempFiles, ExitCodeContract) {
  const auto good = write("good.txt", slurp(golden_path("free-3")));
  const auto bad = write("bad.txt", "kind: matroid-flats\nelements: a b\nflat:\nflat: a b\n");
  const auto broken = write("broken.txt", "kind: phi-system\nelements: a a\n");
  EXPECT_EQ(run({"check", good}).code, 0);
  EXPECT_EQ(run({"check", bad}).code, 1);
  const auto r = run({"check", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"check", golden_path("fano"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"check", golden_path("fano"), "--max-size", "13"}).code, 2);
  EXPECT_EQ(run({"closure", golden_path("fano")}).code, 2);
  EXPECT_EQ(run({"closure", golden_path("fano"), "--set", "9"}).code, 2);
  EXPECT_EQ(run({"catalog", "nope"}).code, 2);
  EXPECT_EQ(run({"to-matroid", golden_path("fano")}).code, 2);
  EXPECT_EQ(run({"from-matroid", golden_path("free-3")}).code, 2);
}

TEST_F(TempFiles, MaxSizeOverride) {
  std::string text = "kind: phi-system\nelements: a b c d e f g h i j k\nphi: a b c d e f g h i j k\n";
  const auto path = write("eleven.txt", text);
  EXPECT_EQ(run({"check", path}).code, 2);
  const auto r = run({"check", path, "--max-size", "11"});
  EXPECT_EQ(r.code, 1);  // singletons missing: mu fails
  EXPECT_NE(r.out.find("mu"), std::string::npos);
}

TEST(Json, ReportRoundTripsThroughItsSchema) {
  const std::vector<std::vector<std::string>> commands{
      {"check", golden_path("fano"), "--format", "json"},
      {"check", golden_path("uniform-1-2"), "--format", "json"},
      {"to-matroid", golden_path("nonmax"), "--format", "json"},
      {"from-matroid", golden_path("uniform-2-4"), "--format=json"},
      {"roundtrip", golden_path("k4"), "--format", "json"},
      {"props", golden_path("free-3"), "--format", "json"},
      {"closure", golden_path("fano"), "--set", "1 2", "--format", "json"},
      {"primes", golden_path("nonmax"), "--format", "json"},
      {"catalog", "fano", "--format", "json"},
  };
  for (const auto& args : commands) {
    const auto r = run(args);
    ASSERT_NE(r.code, 2) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const Report report = report_from_json(doc);
    EXPECT_EQ(to_json(report), doc);
    EXPECT_EQ(to_json(report).dump(2) + "\n", r.out);
    EXPECT_EQ(doc.at("passed").get<bool>(), r.code == 0) << args[0];
  }
}

TEST(Json, SchemaViolationsRejected) {
  const auto good = nlohmann::json::parse(run({"check", golden_path("free-1"), "--format", "json"}).out);
  auto broken = good;
  broken.erase("command");
  EXPECT_THROW(report_from_json(broken), Error);
  broken = good;
  broken["passed"] = false;
  EXPECT_THROW(report_from_json(broken), Error);
  broken = good;
  broken["sections"][0]["items"][0]["witness"] = "x";
  EXPECT_THROW(report_from_json(broken), Error);
  broken = good;
  broken["output"] = 3;
  EXPECT_THROW(report_from_json(broken), Error);
}

TEST(Text, WitnessOfFirstFailureIsPrinted) {
  const auto r = run({"check", golden_path("uniform-1-2")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("simple                            FAIL  witness: {a, b}  (parallel pair)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("mu                                FAIL  witness: {a}"), std::string::npos);
}

}  // namespace
}  // namespace phimat
