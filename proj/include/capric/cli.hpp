#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "capric/parity.hpp"
#include "capric/pricing.hpp"

namespace capric::cli {

// Exit codes shared by run() and the binary.
inline constexpr int kExitClean = 0;     // success, nothing to flag
inline constexpr int kExitFinding = 1;   // parity failure, negative spread, or arbitrage
inline constexpr int kExitInput = 2;     // input or validation error
inline constexpr int kExitInternal = 3;  // solver or internal error

enum class Command { price, spread, parity, arbitrage, generate, report };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::report;

  std::string capacity_path;
  std::vector<std::string> payoff_paths;

  std::optional<ParityKind> parity_kind;  // required by `parity`
  RuleKind rule_kind = RuleKind::choquet;

  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  bool exact = false;
  std::size_t sweep_payoff_count = 500;

  // generate command
  std::string generator_kind;
  std::vector<std::string> generator_states;
  std::vector<double> generator_weights;
  double generator_gamma = 1.0;
  double generator_epsilon = 0.0;
  std::string output_path;
};

/// Executes one command, writing the report to `out` and diagnostics to
/// `err`. Returns the exit code; never throws. Identical configs over
/// identical input files produce byte-identical output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace capric::cli
