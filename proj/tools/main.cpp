#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "capric/cli.hpp"
#include "capric/version.hpp"

namespace {

using capric::cli::Command;
using capric::cli::OutputFormat;
using capric::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& config, std::string& format,
                std::string& rule) {
  cmd->add_option("--capacity,-c", config.capacity_path,
                  "Capacity file (JSON)")
      ->required();
  cmd->add_option("--rule,-r", rule,
                  "Pricing rule: choquet, sipos, linear (default choquet)");
  cmd->add_option("--tol", config.tolerance,
                  "Check tolerance (default 1e-9)");
  cmd->add_option("--format,-f", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_payoffs(CLI::App* cmd, RunConfig& config, bool required) {
  auto* opt = cmd->add_option("--payoff,-p", config.payoff_paths,
                              "Payoff file (JSON); repeatable");
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonadditive pricing toolkit: Choquet and symmetric pricing "
               "rules, put-call parities, and arbitrage detection over a "
               "finite state space"};
  app.set_version_flag("--version", std::string("capric ") + capric::kVersion);
  app.require_subcommand(1);
  app.get_formatter()->column_width(30);

  RunConfig config;
  std::string format = "text";
  std::string rule = "choquet";
  std::string parity;

  CLI::App* price = app.add_subcommand(
      "price", "Quote ask, bid, spread, and symmetric value per payoff");
  add_common(price, config, format, rule);
  add_payoffs(price, config, true);

  CLI::App* spread = app.add_subcommand(
      "spread", "Scan quoted spreads for negativity (exit 1 on a finding)");
  add_common(spread, config, format, rule);
  add_payoffs(spread, config, false);

  CLI::App* parity_cmd = app.add_subcommand(
      "parity", "Sweep one put-call-type parity (exit 1 on failures)");
  add_common(parity_cmd, config, format, rule);
  add_payoffs(parity_cmd, config, false);
  parity_cmd
      ->add_option("--kind", parity, "Parity: pcp, cpp, dcp, dcpstar")
      ->required();
  parity_cmd->add_option("--count", config.sweep_payoff_count,
                         "Sweep payoff count (default 500)");
  parity_cmd->add_option("--seed", config.seed, "Sweep seed (default 0)");

  CLI::App* arbitrage = app.add_subcommand(
      "arbitrage",
      "Decide arbitrage: risk-neutral measure or explicit certificate");
  add_common(arbitrage, config, format, rule);
  arbitrage->add_flag("--exact", config.exact,
                      "Decide with exact rational arithmetic");

  CLI::App* generate = app.add_subcommand(
      "generate", "Emit a named capacity (additive, distortion, "
                  "epsilon_contamination)");
  generate
      ->add_option("--kind", config.generator_kind,
                   "additive, distortion, epsilon_contamination")
      ->required();
  generate
      ->add_option("--states", config.generator_states,
                   "State names; repeatable")
      ->required();
  generate
      ->add_option("--weights", config.generator_weights,
                   "Nonnegative weights, one per state")
      ->required();
  generate->add_option("--gamma", config.generator_gamma,
                       "Distortion exponent (kind=distortion)");
  generate->add_option("--epsilon", config.generator_epsilon,
                       "Contamination level (kind=epsilon_contamination)");
  generate->add_option("--out,-o", config.output_path,
                       "Write to this file instead of stdout");
  generate->add_option("--format,-f", format,
                       "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* report = app.add_subcommand(
      "report", "Full diagnostic: classification, spreads, all four "
                "parities, arbitrage");
  add_common(report, config, format, rule);
  add_payoffs(report, config, false);
  report->add_option("--count", config.sweep_payoff_count,
                     "Sweep payoff count (default 500)");
  report->add_option("--seed", config.seed, "Sweep seed (default 0)");
  report->add_flag("--exact", config.exact,
                   "Decide arbitrage with exact rational arithmetic");

  CLI11_PARSE(app, argc, argv);

  try {
    config.rule_kind = capric::parse_rule_kind(rule);
    if (!parity.empty()) {
      config.parity_kind = capric::parse_parity_kind(parity);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return capric::cli::kExitInput;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;

  if (price->parsed()) config.command = Command::price;
  if (spread->parsed()) config.command = Command::spread;
  if (parity_cmd->parsed()) config.command = Command::parity;
  if (arbitrage->parsed()) config.command = Command::arbitrage;
  if (generate->parsed()) config.command = Command::generate;
  if (report->parsed()) config.command = Command::report;

  return capric::cli::run(config, std::cout, std::cerr);
}
