#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "seccoh/commands.hpp"

int main(int argc, char** argv) {
  using namespace seccoh;
  CLI::App app{"Semi-equivariant cohomology and bundle lifting on finite scenarios"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string command;
  RunOptions opt;
  std::size_t degree = 0;
  std::string extension, cocycle, coefficients, json_out;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--scenario", opt.scenario_path, "Scenario JSON file")->required();
  auto* deg = app.add_option("--degree", degree, "Cohomological degree");
  auto* ext = app.add_option("--extension", extension, "Extension name");
  auto* coc = app.add_option("--cocycle", cocycle, "Cocycle name");
  auto* cof = app.add_option("--coefficients", coefficients, "Coefficient group name");
  app.add_option("--oracle", opt.oracle, "Lifting oracle")->check(CLI::IsMember({"solve", "brute", "both"}));
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--budget", opt.budget, "Search budget in nodes")->check(CLI::PositiveNumber);
  app.add_option("--json", json_out, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (*deg) opt.degree = degree;
  if (*ext) opt.extension = extension;
  if (*coc) opt.cocycle = cocycle;
  if (*cof) opt.coefficients = coefficients;

  Report report = run_file(command, opt);
  const std::string text = report.json.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out);
    if (!(out << text)) {
      std::cerr << "cannot write " << json_out << "\n";
      return kExitInput;
    }
    std::cerr << report.json["status"].get<std::string>() << "\n";
  }
  if (report.exit_code != kExitOk && !report.json["failures"].empty())
    std::cerr << "seccoh: " << report.json["failures"][0].get<std::string>() << "\n";
  return report.exit_code;
}
