// Command dispatch for the seccoh tool. Every command produces a JSON report
// and an exit code; reports carry no timing, so identical inputs give
// byte-identical output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seccoh/nonabelian.hpp"
#include "seccoh/scenario.hpp"

namespace seccoh {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitInput = 2, kExitBudget = 3 };

struct RunOptions {
  std::string scenario_path;
  std::optional<std::size_t> degree;
  std::optional<std::string> extension;
  std::optional<std::string> cocycle;
  std::optional<std::string> coefficients;
  std::string oracle = "solve";  // solve | brute | both
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
};

struct Report {
  nlohmann::ordered_json json;
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed scenario. Input, budget and assertion
/// failures are reported in the JSON and the exit code, never thrown.
Report run(const std::string& command, const Scenario& scenario, const RunOptions& options);
/// Loads options.scenario_path first; a bad file gives exit code 2.
Report run_file(const std::string& command, const RunOptions& options);

/// JSON form of a cochain, matching the scenario file's cocycle entries.
nlohmann::ordered_json cochain_json(const Cochain& phi, const std::string& coefficients);

}  // namespace seccoh
