#include "sympair/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace sympair;
  CLI::App app{"Invariants of symmetric pairs and minuscule affine Weyl elements"};
  app.require_subcommand(1);

  RunConfig config;
  config.threads = default_threads();
  bool no_checks = false;
  auto* verify = app.add_subcommand("verify", "run the verification pipeline on one pair");
  verify->add_option("--pair", config.pair, "preset name or JSON descriptor file")->required();
  verify->add_option("--checks", config.checks, "checks to run (default: all)")
      ->check(CLI::IsMember(check_names()))
      ->delimiter(',');
  verify->add_flag("--no-checks", no_checks, "compute dimensions only");
  verify->add_option("--max-bidegree", config.max_bidegree, "largest p, q scanned (default dim p)")->check(CLI::NonNegativeNumber);
  verify->add_option("--ceiling", config.ceiling, "largest component size in monomials");
  verify->add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", config.output_path, "write the report here instead of stdout");
  verify->add_flag("--timings", config.timings, "include wall-clock times in the JSON report");
  verify->add_option("--budget", config.budget_seconds, "wall-clock budget in seconds, checked between stages");

  std::string presets_format = "text";
  auto* presets = app.add_subcommand("presets", "list the shipped pairs");
  presets->add_option("--format", presets_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_bad_input;
  }

  if (presets->parsed()) {
    const auto catalog = list_presets();
    std::cout << (presets_format == "json" ? catalog.dump(2) + "\n" : render_presets(catalog));
    return 0;
  }

  if (no_checks) config.checks.clear();
  const RunResult result = run_verify(config);
  const std::string body = config.format == "json" ? result.report.dump(2) + "\n" : render_text(result);
  if (config.output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(config.output_path);
    if (!out) {
      std::cerr << "cannot write " << config.output_path << "\n";
      return exit_bad_input;
    }
    out << body;
  }
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
