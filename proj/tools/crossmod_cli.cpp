#include <cstddef>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "crossmod/io.hpp"

namespace {

int finish(const crossmod::CommandOutcome& outcome, const std::string& format_flag) {
  if (!outcome.usable()) {
    std::cerr << "error: " << outcome.error << "\n";
    return outcome.exit_code;
  }
  std::string format = !format_flag.empty()  ? format_flag
                       : !outcome.format.empty() ? outcome.format
                                                 : "text";
  if (format == "json")
    std::cout << crossmod::emit_json(outcome.report);
  else
    std::cout << crossmod::emit_text(outcome.report);
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verify finite crossed modules and realize them as normal inclusions of simplicial groups"};
  app.require_subcommand(1);

  std::string file;
  std::string format;
  int levels = -1;
  std::size_t max_order = 0;
  bool list = false;
  bool all = false;
  std::string run_name;

  CLI::App* validate =
      app.add_subcommand("validate", "check the two crossed-module laws of a problem file");
  validate->add_option("file", file, "problem JSON document")->required();

  CLI::App* realize = app.add_subcommand(
      "realize", "build the simplicial realization of a problem file and run every check");
  realize->add_option("file", file, "problem JSON document")->required();
  realize->add_option("--levels", levels, "truncation depth (document option or 3)")
      ->check(CLI::Range(1, 16));
  realize->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  realize->add_option("--max-order", max_order,
                      "largest group order the pipeline may build");

  CLI::App* catalog = app.add_subcommand("catalog", "built-in example problems");
  catalog->add_flag("--list", list, "print the entry table");
  catalog->add_option("--run", run_name, "run one entry end to end");
  catalog->add_flag("--all", all, "run every entry; the negative ones must fail");
  catalog->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : crossmod::kExitUsage;
  }

  if (validate->parsed()) return finish(crossmod::cmd_validate(file), format);

  if (realize->parsed()) {
    crossmod::RealizeOverrides overrides;
    if (levels > 0) overrides.levels = levels;
    if (max_order > 0) overrides.max_order = max_order;
    if (!format.empty()) overrides.format = format;
    return finish(crossmod::cmd_realize(file, overrides), format);
  }

  const int chosen = int(list) + int(all) + int(!run_name.empty());
  if (chosen != 1) {
    std::cerr << "error: choose exactly one of --list, --run NAME, --all\n";
    return crossmod::kExitUsage;
  }
  if (list) {
    std::cout << crossmod::catalog_listing();
    return crossmod::kExitPass;
  }
  if (!run_name.empty()) return finish(crossmod::cmd_catalog_run(run_name), format);
  return finish(crossmod::cmd_catalog_all(), format);
}
