#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossmod/crossed.hpp"

namespace crossmod {

// Parsed problem document. The JSON shape is part of the contract:
//   {
//     "groups": {
//       "<name>": {"table": [...], "order": n}           row-major, n*n entries
//       "<name>": {"permutations": [[...], ...]}          generators, index -> image
//     },
//     "source": "<name>", "target": "<name>",
//     "map": [g0, g1, ...],                               image of each source element
//     "action": "conjugation" | {"tables": [[...], ...]}  one source permutation per
//                                                         target element
//     "options": {"levels": 3, "max_order": 1048576, "format": "text"}   all optional
//   }
// Parsing enforces structure only: names resolve, shapes match, indices are in
// range. Whether the data satisfies the crossed-module laws is left to the
// validation commands so failures come back as witnesses, not parse errors.
struct ProblemSpec {
  Group source;
  Group target;
  std::vector<Elem> map_image;
  bool conjugation_action = false;
  std::vector<std::vector<Elem>> action_tables;
  int levels = 3;
  std::size_t max_order = 0;
  std::string format;
};

// Throws ParseError; for syntax errors the message carries the byte offset,
// for shape errors the offending field path. closure_cap bounds permutation
// group closure (0 means use the document option, the CROSSMOD_MAX_ORDER
// environment variable, or the built-in default, in that order).
ProblemSpec parse_problem(const std::string& json_text, std::size_t closure_cap = 0);

struct ReportViolation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string note;

  bool operator==(const ReportViolation&) const = default;
};

struct ReportCheck {
  std::string name;
  bool ran = true;
  std::string skip_reason;
  bool passed = false;
  std::vector<ReportViolation> violations;

  bool operator==(const ReportCheck&) const = default;
};

// Component and level cardinalities of a realization run.
struct ReportSizes {
  std::uint64_t pi0_ambient = 0;
  std::uint64_t pi0_inner = 0;
  std::vector<std::uint64_t> ambient_levels;
  std::vector<std::uint64_t> kernel_levels;
  std::vector<std::uint64_t> quotient_levels;

  bool operator==(const ReportSizes&) const = default;
};

// Machine-readable outcome of one command. Check names are stable across
// versions; violations are sorted by axiom tag then witness; every field
// except wall_ms is byte-stable across runs on the same input.
struct Report {
  std::string command;
  std::string input;
  bool passed = false;
  std::uint64_t wall_ms = 0;
  std::optional<ReportSizes> sizes;
  std::vector<ReportCheck> checks;

  bool operator==(const Report&) const = default;
};

std::string emit_json(const Report& r);
std::string emit_text(const Report& r);
// Inverse of emit_json: parse_report(emit_json(r)) == r. Throws ParseError.
Report parse_report(const std::string& json_text);

// Exit codes shared by all commands, never conflated: 0 every check passed,
// 1 a mathematical law failed, 2 unusable input or resource cap.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutcome {
  int exit_code = kExitPass;
  Report report;
  std::string error;
  std::string format;

  bool usable() const { return exit_code != kExitUsage; }
};

struct RealizeOverrides {
  std::optional<int> levels;
  std::optional<std::size_t> max_order;
  std::optional<std::string> format;
};

// Command-line flag > document option > CROSSMOD_MAX_ORDER > 2^20.
std::size_t effective_max_order(const ProblemSpec& spec, const RealizeOverrides& o);

// Crossed-module assembly from a parsed problem. Construction failures (map
// not a homomorphism, action tables not a group action, conjugation leaving
// the image) come back as failed checks with witnesses instead of exceptions:
//   map-homomorphism   action-axioms   conjugation-action
struct BuiltProblem {
  std::optional<NormalMap> nm;
  std::vector<ReportCheck> failures;
};
BuiltProblem build_problem(const ProblemSpec& spec);

// Axiom check only. Report checks: the construction names above plus
// crossed-module-axioms (violation tags nm1, nm2).
CommandOutcome run_validate(const std::string& json_text, const std::string& input_name);
CommandOutcome cmd_validate(const std::string& path);

// Validation, realization at the requested depth, and the round-trip
// comparison. Report checks: the validate names, the seven realization
// checks, then roundtrip. Sizes are filled from the realization.
CommandOutcome run_realize(const std::string& json_text, const std::string& input_name,
                           const RealizeOverrides& o = {});
CommandOutcome cmd_realize(const std::string& path, const RealizeOverrides& o = {});

// One line per entry: name, expected verdict, summary.
std::string catalog_listing();
// Full pipeline on one entry: validation, and for entries expected to be
// valid also realization plus round-trip. Unknown names exit with kExitUsage.
CommandOutcome cmd_catalog_run(const std::string& name, int levels = 3);
// Every entry, one report check each. Entries expected to fail must fail
// validation for the check to pass, so vacuous successes are impossible.
CommandOutcome cmd_catalog_all(int levels = 3);

}  // namespace crossmod
