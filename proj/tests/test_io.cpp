#include "crossmod/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <tuple>
#include <vector>

#include "crossmod/catalog.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crossmod;
using nlohmann::json;

namespace {

const std::vector<int> kZ4Table{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
const std::vector<int> kZ2Table{0, 1, 1, 0};
const std::vector<int> kZ3Table{0, 1, 2, 1, 2, 0, 2, 0, 1};

json mod2_doc() {
  json doc;
  doc["groups"]["N"]["order"] = 4;
  doc["groups"]["N"]["table"] = kZ4Table;
  doc["groups"]["G"]["order"] = 2;
  doc["groups"]["G"]["table"] = kZ2Table;
  doc["source"] = "N";
  doc["target"] = "G";
  doc["map"] = {0, 1, 0, 1};
  doc["action"]["tables"] = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  return doc;
}

json inclusion_doc() {
  json doc;
  doc["groups"]["A3"]["order"] = 3;
  doc["groups"]["A3"]["table"] = kZ3Table;
  doc["groups"]["S3"]["permutations"] = {{1, 0, 2}, {1, 2, 0}};
  doc["source"] = "A3";
  doc["target"] = "S3";
  doc["map"] = {0, 2, 4};
  doc["action"] = "conjugation";
  return doc;
}

void expect_parse_error(const json& doc, const char* label) {
  CAPTURE(label);
  try {
    parse_problem(doc.dump());
    FAIL("expected ParseError for ", label);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

bool violations_sorted(const ReportCheck& c) {
  return std::is_sorted(c.violations.begin(), c.violations.end(),
                        [](const ReportViolation& a, const ReportViolation& b) {
                          return std::tie(a.axiom, a.witness, a.note) <
                                 std::tie(b.axiom, b.witness, b.note);
                        });
}

std::filesystem::path write_temp(const char* name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("problem documents parse into resolved groups and options") {
  json doc = mod2_doc();
  doc["options"] = {{"levels", 2}, {"max_order", 4096}, {"format", "json"}};
  ProblemSpec spec = parse_problem(doc.dump());
  CHECK(spec.source.order() == 4);
  CHECK(spec.target.order() == 2);
  CHECK(spec.map_image == std::vector<Elem>{0, 1, 0, 1});
  CHECK_FALSE(spec.conjugation_action);
  CHECK(spec.action_tables.size() == 2);
  CHECK(spec.levels == 2);
  CHECK(spec.max_order == 4096);
  CHECK(spec.format == "json");

  ProblemSpec incl = parse_problem(inclusion_doc().dump());
  CHECK(incl.source.order() == 3);
  CHECK(incl.target.order() == 6);
  CHECK(incl.conjugation_action);
  CHECK(incl.levels == 3);
  CHECK(incl.max_order == 0);
}

TEST_CASE("malformed documents fail with ParseError") {
  try {
    parse_problem("{\"groups\": ");
    FAIL("expected ParseError for truncated json");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("syntax") != std::string::npos);
  }

  expect_parse_error(json::array(), "top level not an object");

  json doc = mod2_doc();
  doc["extra"] = 1;
  expect_parse_error(doc, "unknown top-level field");

  doc = mod2_doc();
  doc.erase("map");
  expect_parse_error(doc, "missing map");

  doc = mod2_doc();
  doc["source"] = "missing";
  expect_parse_error(doc, "unresolved source");

  doc = mod2_doc();
  doc["map"] = {0, 1, 0};
  expect_parse_error(doc, "map length");

  doc = mod2_doc();
  doc["map"] = {0, 1, 0, 2};
  expect_parse_error(doc, "map image out of range");

  doc = mod2_doc();
  doc["groups"]["N"]["order"] = 3;
  expect_parse_error(doc, "table size vs order");

  doc = mod2_doc();
  doc["groups"]["N"].erase("order");
  expect_parse_error(doc, "table without order");

  doc = mod2_doc();
  doc["groups"]["N"]["permutations"] = {{1, 0}};
  expect_parse_error(doc, "both table and permutations");

  doc = inclusion_doc();
  doc["groups"]["S3"]["permutations"] = {{1, 1, 2}};
  expect_parse_error(doc, "repeated image in a permutation");

  doc = mod2_doc();
  doc["action"]["tables"] = {{0, 1, 2, 3}};
  expect_parse_error(doc, "one action table per target element");

  doc = mod2_doc();
  doc["action"] = "left-translation";
  expect_parse_error(doc, "unknown named action");

  doc = mod2_doc();
  doc["options"] = {{"levels", 0}};
  expect_parse_error(doc, "levels below one");

  doc = mod2_doc();
  doc["options"] = {{"format", "xml"}};
  expect_parse_error(doc, "unknown format");

  doc = mod2_doc();
  doc["options"] = {{"cache", true}};
  expect_parse_error(doc, "unknown option");
}

TEST_CASE("construction failures become named checks with witnesses") {
  SUBCASE("map that is not a homomorphism") {
    json doc = mod2_doc();
    doc["map"] = {0, 1, 1, 0};
    BuiltProblem built = build_problem(parse_problem(doc.dump()));
    REQUIRE_FALSE(built.nm.has_value());
    REQUIRE(built.failures.size() == 1);
    CHECK(built.failures[0].name == "map-homomorphism");
    CHECK_FALSE(built.failures[0].passed);
    CHECK_FALSE(built.failures[0].violations.empty());
  }

  SUBCASE("conjugation through a non-injective map") {
    json doc;
    doc["groups"]["N"]["order"] = 2;
    doc["groups"]["N"]["table"] = kZ2Table;
    doc["source"] = "N";
    doc["target"] = "N";
    doc["map"] = {0, 0};
    doc["action"] = "conjugation";
    BuiltProblem built = build_problem(parse_problem(doc.dump()));
    REQUIRE(built.failures.size() == 1);
    CHECK(built.failures[0].name == "conjugation-action");
    CHECK(built.failures[0].violations[0].axiom == "map-injective");
  }

  SUBCASE("conjugation out of a non-normal image") {
    json doc;
    doc["groups"]["N"]["order"] = 2;
    doc["groups"]["N"]["table"] = kZ2Table;
    doc["groups"]["S3"]["permutations"] = {{1, 0, 2}, {1, 2, 0}};
    doc["source"] = "N";
    doc["target"] = "S3";
    doc["map"] = {0, 1};
    doc["action"] = "conjugation";
    BuiltProblem built = build_problem(parse_problem(doc.dump()));
    REQUIRE(built.failures.size() == 1);
    CHECK(built.failures[0].name == "conjugation-action");
    CHECK(built.failures[0].violations[0].axiom == "image-closed");
  }

  SUBCASE("tables that are not a group action") {
    json doc = mod2_doc();
    doc["action"]["tables"] = {{0, 1, 2, 3}, {1, 2, 3, 0}};
    BuiltProblem built = build_problem(parse_problem(doc.dump()));
    REQUIRE(built.failures.size() == 1);
    CHECK(built.failures[0].name == "action-axioms");
    CHECK_FALSE(built.failures[0].violations.empty());
  }
}

TEST_CASE("validate command reports axioms and distinguishes exit codes") {
  CommandOutcome good = run_validate(mod2_doc().dump(), "mod2-doc");
  CHECK(good.exit_code == kExitPass);
  CHECK(good.report.command == "validate");
  CHECK(good.report.input == "mod2-doc");
  CHECK(good.report.passed);
  REQUIRE(good.report.checks.size() == 1);
  CHECK(good.report.checks[0].name == "crossed-module-axioms");

  json scrambled = mod2_doc();
  scrambled["action"]["tables"] = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  CommandOutcome bad = run_validate(scrambled.dump(), "scrambled");
  CHECK(bad.exit_code == kExitCheckFailed);
  CHECK_FALSE(bad.report.passed);
  REQUIRE(bad.report.checks.size() == 1);
  const ReportCheck& axioms = bad.report.checks[0];
  CHECK_FALSE(axioms.passed);
  CHECK(std::any_of(axioms.violations.begin(), axioms.violations.end(),
                    [](const ReportViolation& v) { return v.axiom == "nm2"; }));
  CHECK(violations_sorted(axioms));

  CommandOutcome broken = run_validate("not json", "broken");
  CHECK(broken.exit_code == kExitUsage);
  CHECK_FALSE(broken.usable());
  CHECK_FALSE(broken.error.empty());
}

TEST_CASE("realize command pins the published cardinalities") {
  CommandOutcome out = run_realize(mod2_doc().dump(), "mod2-doc");
  CHECK(out.exit_code == kExitPass);
  CHECK(out.report.passed);
  REQUIRE(out.report.checks.size() == 9);
  CHECK(out.report.checks.front().name == "crossed-module-axioms");
  CHECK(out.report.checks.back().name == "roundtrip");
  for (const ReportCheck& c : out.report.checks) CHECK(c.passed);

  REQUIRE(out.report.sizes.has_value());
  const ReportSizes& sizes = *out.report.sizes;
  CHECK(sizes.pi0_ambient == 2);
  CHECK(sizes.pi0_inner == 4);
  CHECK(sizes.ambient_levels == std::vector<std::uint64_t>{8, 32, 128, 512});
  CHECK(sizes.kernel_levels == std::vector<std::uint64_t>{4, 4, 4, 4});
  CHECK(sizes.quotient_levels == std::vector<std::uint64_t>{2, 8, 32, 128});
}

TEST_CASE("realize command honors levels, caps and document options") {
  SUBCASE("shallow truncation skips the degree-one homotopy check") {
    RealizeOverrides o;
    o.levels = 1;
    CommandOutcome out = run_realize(mod2_doc().dump(), "mod2-doc", o);
    CHECK(out.exit_code == kExitPass);
    auto it = std::find_if(out.report.checks.begin(), out.report.checks.end(),
                           [](const ReportCheck& c) { return c.name == "moore-pi1-trivial"; });
    REQUIRE(it != out.report.checks.end());
    CHECK_FALSE(it->ran);
    CHECK(it->skip_reason == "needs depth at least two");
    CHECK(out.report.sizes->ambient_levels == std::vector<std::uint64_t>{8, 32});
  }

  SUBCASE("document levels option applies when no flag is given") {
    json doc = mod2_doc();
    doc["options"] = {{"levels", 2}};
    CommandOutcome out = run_realize(doc.dump(), "mod2-doc");
    CHECK(out.report.sizes->ambient_levels.size() == 3);
  }

  SUBCASE("levels out of range is a usage error") {
    RealizeOverrides o;
    o.levels = 0;
    CHECK(run_realize(mod2_doc().dump(), "mod2-doc", o).exit_code == kExitUsage);
  }

  SUBCASE("order cap rejects the run before building anything") {
    RealizeOverrides o;
    o.max_order = 100;
    CommandOutcome out = run_realize(mod2_doc().dump(), "mod2-doc", o);
    CHECK(out.exit_code == kExitUsage);
    CHECK(out.error.find("cap") != std::string::npos);
  }

  SUBCASE("environment variable supplies the default cap") {
    REQUIRE(setenv("CROSSMOD_MAX_ORDER", "100", 1) == 0);
    CommandOutcome capped = run_realize(mod2_doc().dump(), "mod2-doc");
    REQUIRE(unsetenv("CROSSMOD_MAX_ORDER") == 0);
    CHECK(capped.exit_code == kExitUsage);
    CHECK(run_realize(mod2_doc().dump(), "mod2-doc").exit_code == kExitPass);
  }

  SUBCASE("format precedence is flag over document") {
    json doc = mod2_doc();
    doc["options"] = {{"format", "json"}};
    CHECK(run_realize(doc.dump(), "d").format == "json");
    RealizeOverrides o;
    o.format = "text";
    CHECK(run_realize(doc.dump(), "d", o).format == "text");
  }

  SUBCASE("failed validation skips the pipeline and exits one") {
    json doc = mod2_doc();
    doc["action"]["tables"] = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    CommandOutcome out = run_realize(doc.dump(), "scrambled");
    CHECK(out.exit_code == kExitCheckFailed);
    REQUIRE(out.report.checks.size() == 9);
    CHECK_FALSE(out.report.checks[0].passed);
    for (std::size_t i = 1; i < out.report.checks.size(); ++i) {
      CHECK_FALSE(out.report.checks[i].ran);
      CHECK(out.report.checks[i].skip_reason == "validation failed");
    }
    CHECK_FALSE(out.report.sizes.has_value());
  }
}

TEST_CASE("conjugation documents drive the full pipeline") {
  CommandOutcome out = run_realize(inclusion_doc().dump(), "inclusion-doc");
  CHECK(out.exit_code == kExitPass);
  CHECK(out.report.passed);
  CHECK(out.report.sizes->pi0_ambient == 6);
  CHECK(out.report.sizes->pi0_inner == 3);
}

TEST_CASE("json reports round-trip exactly") {
  CommandOutcome out = run_realize(mod2_doc().dump(), "mod2-doc");
  CHECK(parse_report(emit_json(out.report)) == out.report);

  json scrambled = mod2_doc();
  scrambled["action"]["tables"] = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  CommandOutcome bad = run_validate(scrambled.dump(), "scrambled");
  CHECK(parse_report(emit_json(bad.report)) == bad.report);

  Report empty;
  empty.command = "validate";
  empty.input = "x";
  CHECK(parse_report(emit_json(empty)) == empty);

  CHECK_THROWS_AS(parse_report("{"), Error);
  CHECK_THROWS_AS(parse_report("{\"command\": \"validate\"}"), Error);
  CHECK_THROWS_AS(parse_report(
                      "{\"command\": 3, \"input\": \"x\", \"passed\": true, "
                      "\"wall_ms\": 0, \"checks\": []}"),
                  Error);
}

TEST_CASE("reports are byte-stable once the wall clock is zeroed") {
  CommandOutcome a = run_realize(mod2_doc().dump(), "mod2-doc");
  CommandOutcome b = run_realize(mod2_doc().dump(), "mod2-doc");
  a.report.wall_ms = 0;
  b.report.wall_ms = 0;
  CHECK(emit_json(a.report) == emit_json(b.report));
  CHECK(emit_text(a.report) == emit_text(b.report));
}

TEST_CASE("text reports carry the verdict, sizes and per-check lines") {
  RealizeOverrides o;
  o.levels = 1;
  CommandOutcome out = run_realize(mod2_doc().dump(), "mod2-doc", o);
  std::string text = emit_text(out.report);
  CHECK(text.find("realize mod2-doc: PASS") != std::string::npos);
  CHECK(text.find("pi0 ambient: 2") != std::string::npos);
  CHECK(text.find("pi0 inner: 4") != std::string::npos);
  CHECK(text.find("[pass] roundtrip") != std::string::npos);
  CHECK(text.find("[skip] moore-pi1-trivial (needs depth at least two)") !=
        std::string::npos);

  json scrambled = mod2_doc();
  scrambled["action"]["tables"] = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  std::string failed = emit_text(run_validate(scrambled.dump(), "s").report);
  CHECK(failed.find("FAIL") != std::string::npos);
  CHECK(failed.find("nm2 witness=(") != std::string::npos);
}

TEST_CASE("file commands read documents and report unreadable paths") {
  auto good = write_temp("crossmod_io_good.json", mod2_doc().dump());
  CommandOutcome out = cmd_validate(good.string());
  CHECK(out.exit_code == kExitPass);
  CHECK(out.report.input == good.string());
  CHECK(cmd_realize(good.string()).exit_code == kExitPass);

  CommandOutcome missing = cmd_validate("/nonexistent/path.json");
  CHECK(missing.exit_code == kExitUsage);
  CHECK(missing.error.find("cannot read") != std::string::npos);
  CHECK(cmd_realize("/nonexistent/path.json").exit_code == kExitUsage);

  auto broken = write_temp("crossmod_io_broken.json", "{\"groups\":");
  CHECK(cmd_validate(broken.string()).exit_code == kExitUsage);
}

TEST_CASE("catalog commands list, run and sweep the shipped entries") {
  std::string listing = catalog_listing();
  CHECK(std::count(listing.begin(), listing.end(), '\n') >= 8);
  for (const char* name : {"identity-S3", "incl-A3-S3", "mod2", "bad-S3-trivial"})
    CHECK(listing.find(name) != std::string::npos);

  CommandOutcome run = cmd_catalog_run("mod2");
  CHECK(run.exit_code == kExitPass);
  CHECK(run.report.command == "catalog");
  CHECK(run.report.checks.size() == 9);
  CHECK(run.report.sizes->pi0_ambient == 2);
  CHECK(run.report.sizes->pi0_inner == 4);

  CommandOutcome negative = cmd_catalog_run("bad-S3-trivial");
  CHECK(negative.exit_code == kExitCheckFailed);
  REQUIRE(negative.report.checks.size() == 1);
  CHECK(std::any_of(negative.report.checks[0].violations.begin(),
                    negative.report.checks[0].violations.end(),
                    [](const ReportViolation& v) { return v.axiom == "nm2"; }));

  CHECK(cmd_catalog_run("no-such-entry").exit_code == kExitUsage);

  CommandOutcome all = cmd_catalog_all();
  CHECK(all.exit_code == kExitPass);
  CHECK(all.report.passed);
  CHECK(all.report.checks.size() == catalog_all().size());
  for (const ReportCheck& c : all.report.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
}
