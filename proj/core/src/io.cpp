#include "crossmod/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "crossmod/catalog.hpp"
#include "crossmod/realize.hpp"
#include "json.hpp"

namespace crossmod {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxOrder = std::size_t{1} << 20;
constexpr Elem kNoIndex = std::numeric_limits<Elem>::max();
constexpr int kMaxLevels = 16;

const char* const kRealizeCheckNames[] = {
    "inner-normal-levelwise",  "inner-discrete-at-level1",
    "ambient-identity-component", "pi0-ambient-iso-target",
    "pi0-inner-iso-source",    "pi0-square-commutes",
    "moore-pi1-trivial",
};

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(Errc::ParseError, what);
}

std::size_t env_max_order() {
  const char* v = std::getenv("CROSSMOD_MAX_ORDER");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') return 0;
  return static_cast<std::size_t>(parsed);
}

std::size_t resolve_cap(std::size_t override_cap, std::size_t document_cap) {
  if (override_cap != 0) return override_cap;
  if (document_cap != 0) return document_cap;
  if (std::size_t env = env_max_order(); env != 0) return env;
  return kDefaultMaxOrder;
}

std::vector<Elem> elem_array(const ordered_json& j, const std::string& path,
                             std::size_t bound) {
  if (!j.is_array()) parse_fail(path + ": expected an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& cell = j[i];
    if (!cell.is_number_unsigned())
      parse_fail(path + "[" + std::to_string(i) + "]: expected a nonnegative integer");
    auto v = cell.get<unsigned long long>();
    if (v >= bound)
      parse_fail(path + "[" + std::to_string(i) + "]: index " + std::to_string(v) +
                 " out of range for order " + std::to_string(bound));
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

Group parse_group(const ordered_json& j, const std::string& name, std::size_t cap) {
  const std::string path = "groups." + name;
  if (!j.is_object()) parse_fail(path + ": expected an object");
  const bool has_table = j.contains("table");
  const bool has_perms = j.contains("permutations");
  if (has_table == has_perms)
    parse_fail(path + ": provide exactly one of table, permutations");

  if (has_table) {
    if (!j.contains("order") || !j["order"].is_number_unsigned())
      parse_fail(path + ".order: required alongside table");
    const auto order = j["order"].get<std::size_t>();
    if (order == 0) parse_fail(path + ".order: must be positive");
    if (order > cap)
      parse_fail(path + ".order: " + std::to_string(order) + " exceeds the cap " +
                 std::to_string(cap));
    std::vector<Elem> flat = elem_array(j["table"], path + ".table", order);
    if (flat.size() != order * order)
      parse_fail(path + ".table: expected " + std::to_string(order * order) +
                 " entries, got " + std::to_string(flat.size()));
    return group_from_table(flat, order, name);
  }

  const auto& perms = j["permutations"];
  if (!perms.is_array() || perms.empty())
    parse_fail(path + ".permutations: expected a nonempty array of permutations");
  if (!perms[0].is_array() || perms[0].empty())
    parse_fail(path + ".permutations[0]: expected a nonempty array");
  const std::size_t degree = perms[0].size();
  std::vector<std::vector<Elem>> gens;
  gens.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const std::string row_path = path + ".permutations[" + std::to_string(i) + "]";
    std::vector<Elem> row = elem_array(perms[i], row_path, degree);
    if (row.size() != degree)
      parse_fail(row_path + ": expected degree " + std::to_string(degree));
    std::vector<char> seen(degree, 0);
    for (Elem v : row) {
      if (seen[v]) parse_fail(row_path + ": repeated image " + std::to_string(v));
      seen[v] = 1;
    }
    gens.push_back(std::move(row));
  }
  return group_from_permutations(degree, gens, cap, name);
}

ReportViolation to_violation(const Violation& v) {
  return ReportViolation{v.axiom, v.witness, v.note};
}

std::vector<ReportViolation> sorted_violations(const AxiomReport& r) {
  std::vector<ReportViolation> out;
  out.reserve(r.violations.size());
  for (const Violation& v : r.violations) out.push_back(to_violation(v));
  std::sort(out.begin(), out.end(), [](const ReportViolation& a, const ReportViolation& b) {
    return std::tie(a.axiom, a.witness, a.note) < std::tie(b.axiom, b.witness, b.note);
  });
  return out;
}

ReportCheck make_check(std::string name, const AxiomReport& r) {
  ReportCheck c;
  c.name = std::move(name);
  c.passed = r.ok();
  c.violations = sorted_violations(r);
  return c;
}

ReportCheck skipped_check(std::string name, std::string reason) {
  ReportCheck c;
  c.name = std::move(name);
  c.ran = false;
  c.skip_reason = std::move(reason);
  c.passed = true;
  return c;
}

std::string describe(const Error& e) {
  std::string out = std::string(errc_name(e.code())) + ": " + e.what();
  if (!e.witness().empty()) {
    out += " witness=(";
    for (std::size_t i = 0; i < e.witness().size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(e.witness()[i]);
    }
    out += ")";
  }
  return out;
}

bool all_checks_pass(const Report& r) {
  return std::all_of(r.checks.begin(), r.checks.end(),
                     [](const ReportCheck& c) { return c.passed; });
}

class WallClock {
 public:
  std::uint64_t elapsed_ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Appends realization and round-trip checks plus the size block; assumes the
// input already passed validation.
void append_realization(Report& rep, const NormalMap& nm, int levels) {
  Realization r = realize(nm, levels);
  for (const NamedCheck& c : r.checks) {
    ReportCheck rc;
    rc.name = c.name;
    rc.ran = c.ran;
    rc.skip_reason = c.skip_reason;
    rc.passed = c.passed();
    rc.violations = sorted_violations(c.report);
    rep.checks.push_back(std::move(rc));
  }
  if (r.ok()) {
    rep.checks.push_back(make_check("roundtrip", verify_roundtrip(nm, r)));
  } else {
    rep.checks.push_back(skipped_check("roundtrip", "realization checks failed"));
  }

  ReportSizes sizes;
  sizes.pi0_ambient = r.pi0_ambient.group.order();
  sizes.pi0_inner = r.pi0_inner.group.order();
  for (const Group& g : r.ambient.level) sizes.ambient_levels.push_back(g.order());
  for (const Group& g : r.inner.level) sizes.kernel_levels.push_back(g.order());
  for (const Group& g : r.mapped.level) sizes.quotient_levels.push_back(g.order());
  rep.sizes = std::move(sizes);
}

std::string slurp(const std::string& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot read " + path;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

ordered_json violation_json(const ReportViolation& v) {
  return ordered_json{{"axiom", v.axiom}, {"witness", v.witness}, {"note", v.note}};
}

ordered_json check_json(const ReportCheck& c) {
  ordered_json j{{"name", c.name},
                 {"ran", c.ran},
                 {"skip_reason", c.skip_reason},
                 {"passed", c.passed}};
  auto& arr = j["violations"] = ordered_json::array();
  for (const ReportViolation& v : c.violations) arr.push_back(violation_json(v));
  return j;
}

template <typename T>
T field(const ordered_json& j, const char* name) {
  if (!j.contains(name)) parse_fail(std::string("report: missing field ") + name);
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_fail(std::string("report: bad type for field ") + name);
  }
}

}  // namespace

ProblemSpec parse_problem(const std::string& json_text, std::size_t closure_cap) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("json syntax: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level: expected an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "groups" && key != "source" && key != "target" && key != "map" &&
        key != "action" && key != "options")
      parse_fail("unknown top-level field " + key);
  }

  ProblemSpec spec;
  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) parse_fail("options: expected an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "levels") {
        if (!value.is_number_unsigned() || value.get<std::size_t>() < 1 ||
            value.get<std::size_t>() > kMaxLevels)
          parse_fail("options.levels: expected an integer in 1.." +
                     std::to_string(kMaxLevels));
        spec.levels = value.get<int>();
      } else if (key == "max_order") {
        if (!value.is_number_unsigned() || value.get<std::size_t>() == 0)
          parse_fail("options.max_order: expected a positive integer");
        spec.max_order = value.get<std::size_t>();
      } else if (key == "format") {
        if (!value.is_string() || (value != "text" && value != "json"))
          parse_fail("options.format: expected \"text\" or \"json\"");
        spec.format = value.get<std::string>();
      } else {
        parse_fail("options." + key + ": unknown option");
      }
    }
  }
  const std::size_t cap = resolve_cap(closure_cap, spec.max_order);

  if (!doc.contains("groups") || !doc["groups"].is_object())
    parse_fail("groups: expected an object of named groups");
  if (!doc.contains("source") || !doc["source"].is_string())
    parse_fail("source: expected a group name");
  if (!doc.contains("target") || !doc["target"].is_string())
    parse_fail("target: expected a group name");
  const auto sname = doc["source"].get<std::string>();
  const auto tname = doc["target"].get<std::string>();
  const auto& groups = doc["groups"];
  if (!groups.contains(sname)) parse_fail("source: no group named " + sname);
  if (!groups.contains(tname)) parse_fail("target: no group named " + tname);
  spec.source = parse_group(groups[sname], sname, cap);
  spec.target = (tname == sname) ? spec.source : parse_group(groups[tname], tname, cap);

  if (!doc.contains("map")) parse_fail("map: required");
  spec.map_image = elem_array(doc["map"], "map", spec.target.order());
  if (spec.map_image.size() != spec.source.order())
    parse_fail("map: expected " + std::to_string(spec.source.order()) +
               " images, got " + std::to_string(spec.map_image.size()));

  if (!doc.contains("action")) parse_fail("action: required");
  const auto& act = doc["action"];
  if (act.is_string()) {
    if (act.get<std::string>() != "conjugation")
      parse_fail("action: the only named action is \"conjugation\"");
    spec.conjugation_action = true;
  } else if (act.is_object() && act.contains("tables")) {
    const auto& tables = act["tables"];
    if (!tables.is_array() || tables.size() != spec.target.order())
      parse_fail("action.tables: expected one table per target element");
    for (std::size_t g = 0; g < tables.size(); ++g) {
      const std::string row_path = "action.tables[" + std::to_string(g) + "]";
      std::vector<Elem> row = elem_array(tables[g], row_path, spec.source.order());
      if (row.size() != spec.source.order())
        parse_fail(row_path + ": expected " + std::to_string(spec.source.order()) +
                   " entries");
      spec.action_tables.push_back(std::move(row));
    }
  } else {
    parse_fail("action: expected \"conjugation\" or an object with tables");
  }
  return spec;
}

std::size_t effective_max_order(const ProblemSpec& spec, const RealizeOverrides& o) {
  return resolve_cap(o.max_order.value_or(0), spec.max_order);
}

BuiltProblem build_problem(const ProblemSpec& spec) {
  BuiltProblem out;
  Hom n = hom_unchecked(spec.source, spec.target, spec.map_image);
  if (AxiomReport hom_report = check_hom_pairs(n); !hom_report.ok()) {
    out.failures.push_back(make_check("map-homomorphism", hom_report));
    return out;
  }

  Action action;
  if (spec.conjugation_action) {
    AxiomReport conj;
    std::vector<Elem> position(spec.target.order(), kNoIndex);
    for (Elem a = 0; a < spec.source.order(); ++a) {
      const Elem g = spec.map_image[a];
      if (position[g] != kNoIndex) {
        conj.add("map-injective", {position[g], a},
                 "two source elements share an image, conjugation cannot pull back");
      } else {
        position[g] = a;
      }
    }
    if (conj.ok()) {
      std::vector<std::vector<Elem>> tables(
          spec.target.order(), std::vector<Elem>(spec.source.order()));
      for (Elem g = 0; g < spec.target.order() && conj.ok(); ++g)
        for (Elem a = 0; a < spec.source.order(); ++a) {
          const Elem image = spec.target.conj(spec.map_image[a], g);
          if (position[image] == kNoIndex) {
            if (!conj.add("image-closed", {a, g},
                          "conjugate of a mapped element leaves the image"))
              break;
          } else {
            tables[g][a] = position[image];
          }
        }
      if (conj.ok())
        action = action_from_tables_unchecked(spec.target, spec.source,
                                              std::move(tables));
    }
    if (!conj.ok()) {
      out.failures.push_back(make_check("conjugation-action", conj));
      return out;
    }
  } else {
    action = action_from_tables_unchecked(spec.target, spec.source, spec.action_tables);
  }

  if (AxiomReport action_report = check_action(action); !action_report.ok()) {
    out.failures.push_back(make_check("action-axioms", action_report));
    return out;
  }

  out.nm = NormalMap{spec.source, spec.target, std::move(n), std::move(action),
                     spec.source.label() + "->" + spec.target.label()};
  return out;
}

CommandOutcome run_validate(const std::string& json_text, const std::string& input_name) {
  WallClock wall;
  CommandOutcome out;
  out.report.command = "validate";
  out.report.input = input_name;

  ProblemSpec spec;
  try {
    spec = parse_problem(json_text);
  } catch (const Error& e) {
    out.exit_code = kExitUsage;
    out.error = describe(e);
    return out;
  }
  out.format = spec.format;

  BuiltProblem built = build_problem(spec);
  for (ReportCheck& f : built.failures) out.report.checks.push_back(std::move(f));
  if (built.nm)
    out.report.checks.push_back(make_check("crossed-module-axioms", validate(*built.nm)));

  out.report.passed = all_checks_pass(out.report);
  out.exit_code = out.report.passed ? kExitPass : kExitCheckFailed;
  out.report.wall_ms = wall.elapsed_ms();
  return out;
}

CommandOutcome run_realize(const std::string& json_text, const std::string& input_name,
                           const RealizeOverrides& o) {
  WallClock wall;
  CommandOutcome out;
  out.report.command = "realize";
  out.report.input = input_name;

  ProblemSpec spec;
  try {
    spec = parse_problem(json_text, o.max_order.value_or(0));
  } catch (const Error& e) {
    out.exit_code = kExitUsage;
    out.error = describe(e);
    return out;
  }
  out.format = o.format.value_or(spec.format);

  const int levels = o.levels.value_or(spec.levels);
  if (levels < 1 || levels > kMaxLevels) {
    out.exit_code = kExitUsage;
    out.error = "levels must be in 1.." + std::to_string(kMaxLevels);
    return out;
  }
  const std::size_t cap = effective_max_order(spec, o);
  std::size_t top = spec.target.order();
  for (int i = 0; i <= levels; ++i) {
    if (spec.source.order() != 0 && top > cap / spec.source.order()) {
      out.exit_code = kExitUsage;
      out.error = "level " + std::to_string(levels) + " would have order above the cap " +
                  std::to_string(cap);
      return out;
    }
    top *= spec.source.order();
  }

  BuiltProblem built = build_problem(spec);
  for (ReportCheck& f : built.failures) out.report.checks.push_back(std::move(f));
  bool validated = false;
  if (built.nm) {
    AxiomReport axioms = validate(*built.nm);
    out.report.checks.push_back(make_check("crossed-module-axioms", axioms));
    validated = axioms.ok();
  }
  if (validated) {
    try {
      append_realization(out.report, *built.nm, levels);
    } catch (const Error& e) {
      out.exit_code = kExitUsage;
      out.error = describe(e);
      return out;
    }
  } else {
    for (const char* name : kRealizeCheckNames)
      out.report.checks.push_back(skipped_check(name, "validation failed"));
    out.report.checks.push_back(skipped_check("roundtrip", "validation failed"));
  }

  out.report.passed = all_checks_pass(out.report);
  out.exit_code = out.report.passed ? kExitPass : kExitCheckFailed;
  out.report.wall_ms = wall.elapsed_ms();
  return out;
}

CommandOutcome cmd_validate(const std::string& path) {
  std::string error;
  const std::string text = slurp(path, error);
  if (!error.empty()) {
    CommandOutcome out;
    out.exit_code = kExitUsage;
    out.error = std::move(error);
    return out;
  }
  return run_validate(text, path);
}

CommandOutcome cmd_realize(const std::string& path, const RealizeOverrides& o) {
  std::string error;
  const std::string text = slurp(path, error);
  if (!error.empty()) {
    CommandOutcome out;
    out.exit_code = kExitUsage;
    out.error = std::move(error);
    return out;
  }
  return run_realize(text, path, o);
}

std::string catalog_listing() {
  std::ostringstream out;
  for (const CatalogEntry& entry : catalog_all()) {
    out << entry.name;
    for (std::size_t pad = entry.name.size(); pad < 24; ++pad) out << ' ';
    out << (entry.expected_valid ? "valid    " : "invalid  ") << entry.summary << "\n";
  }
  return std::move(out).str();
}

CommandOutcome cmd_catalog_run(const std::string& name, int levels) {
  WallClock wall;
  CommandOutcome out;
  out.report.command = "catalog";
  out.report.input = name;

  CatalogEntry entry;
  try {
    entry = catalog_entry(name);
  } catch (const Error& e) {
    out.exit_code = kExitUsage;
    out.error = describe(e);
    return out;
  }

  AxiomReport axioms = validate(entry.nm);
  out.report.checks.push_back(make_check("crossed-module-axioms", axioms));
  if (entry.expected_valid && axioms.ok())
    append_realization(out.report, entry.nm, levels);

  out.report.passed = all_checks_pass(out.report);
  out.exit_code = out.report.passed ? kExitPass : kExitCheckFailed;
  out.report.wall_ms = wall.elapsed_ms();
  return out;
}

CommandOutcome cmd_catalog_all(int levels) {
  WallClock wall;
  CommandOutcome out;
  out.report.command = "catalog";
  out.report.input = "all";

  for (const CatalogEntry& entry : catalog_all()) {
    ReportCheck c;
    c.name = entry.name;
    AxiomReport axioms = validate(entry.nm);
    if (!entry.expected_valid) {
      c.passed = !axioms.ok();
      if (axioms.ok())
        c.violations.push_back(
            {"expected-failure", {}, "entry expected to fail passed validation"});
    } else if (!axioms.ok()) {
      c.passed = false;
      c.violations = sorted_violations(axioms);
    } else {
      Realization r = realize(entry.nm, levels);
      AxiomReport merged;
      for (const NamedCheck& nc : r.checks) merged.merge(nc.report);
      if (r.ok()) merged.merge(verify_roundtrip(entry.nm, r));
      c.passed = merged.ok();
      c.violations = sorted_violations(merged);
    }
    out.report.checks.push_back(std::move(c));
  }

  out.report.passed = all_checks_pass(out.report);
  out.exit_code = out.report.passed ? kExitPass : kExitCheckFailed;
  out.report.wall_ms = wall.elapsed_ms();
  return out;
}

std::string emit_json(const Report& r) {
  ordered_json j{{"command", r.command},
                 {"input", r.input},
                 {"passed", r.passed},
                 {"wall_ms", r.wall_ms}};
  if (r.sizes) {
    j["sizes"] = ordered_json{{"pi0_ambient", r.sizes->pi0_ambient},
                              {"pi0_inner", r.sizes->pi0_inner},
                              {"ambient_levels", r.sizes->ambient_levels},
                              {"kernel_levels", r.sizes->kernel_levels},
                              {"quotient_levels", r.sizes->quotient_levels}};
  }
  auto& checks = j["checks"] = ordered_json::array();
  for (const ReportCheck& c : r.checks) checks.push_back(check_json(c));
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("json syntax: ") + e.what());
  }
  if (!j.is_object()) parse_fail("report: expected an object");

  Report r;
  r.command = field<std::string>(j, "command");
  r.input = field<std::string>(j, "input");
  r.passed = field<bool>(j, "passed");
  r.wall_ms = field<std::uint64_t>(j, "wall_ms");
  if (j.contains("sizes")) {
    const auto& s = j["sizes"];
    ReportSizes sizes;
    sizes.pi0_ambient = field<std::uint64_t>(s, "pi0_ambient");
    sizes.pi0_inner = field<std::uint64_t>(s, "pi0_inner");
    sizes.ambient_levels = field<std::vector<std::uint64_t>>(s, "ambient_levels");
    sizes.kernel_levels = field<std::vector<std::uint64_t>>(s, "kernel_levels");
    sizes.quotient_levels = field<std::vector<std::uint64_t>>(s, "quotient_levels");
    r.sizes = std::move(sizes);
  }
  if (!j.contains("checks") || !j["checks"].is_array())
    parse_fail("report: missing checks array");
  for (const auto& cj : j["checks"]) {
    ReportCheck c;
    c.name = field<std::string>(cj, "name");
    c.ran = field<bool>(cj, "ran");
    c.skip_reason = field<std::string>(cj, "skip_reason");
    c.passed = field<bool>(cj, "passed");
    if (!cj.contains("violations") || !cj["violations"].is_array())
      parse_fail("report: check " + c.name + " missing violations array");
    for (const auto& vj : cj["violations"]) {
      ReportViolation v;
      v.axiom = field<std::string>(vj, "axiom");
      v.witness = field<std::vector<Elem>>(vj, "witness");
      v.note = field<std::string>(vj, "note");
      c.violations.push_back(std::move(v));
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  out << r.command << " " << r.input << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  if (r.sizes) {
    auto levels = [&](const char* name, const std::vector<std::uint64_t>& v) {
      out << name << ":";
      for (std::uint64_t x : v) out << " " << x;
      out << "\n";
    };
    out << "pi0 ambient: " << r.sizes->pi0_ambient << "\n";
    out << "pi0 inner: " << r.sizes->pi0_inner << "\n";
    levels("ambient levels", r.sizes->ambient_levels);
    levels("kernel levels", r.sizes->kernel_levels);
    levels("quotient levels", r.sizes->quotient_levels);
  }
  for (const ReportCheck& c : r.checks) {
    if (!c.ran)
      out << "[skip] " << c.name << " (" << c.skip_reason << ")\n";
    else if (c.passed)
      out << "[pass] " << c.name << "\n";
    else
      out << "[FAIL] " << c.name << "\n";
    for (const ReportViolation& v : c.violations) {
      out << "       " << v.axiom << " witness=(";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out << ", ";
        out << v.witness[i];
      }
      out << ")";
      if (!v.note.empty()) out << " " << v.note;
      out << "\n";
    }
  }
  out << "wall_ms: " << r.wall_ms << "\n";
  return std::move(out).str();
}

}  // namespace crossmod
