#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "capric/cli.hpp"
#include "capric/io.hpp"

using namespace capric;
using cli::Command;
using cli::OutputFormat;
using cli::RunConfig;
using nlohmann::json;

namespace {

const std::string kFixtures = CAPRIC_FIXTURE_DIR;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

json parse(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("price command reports both sides") {
  RunConfig config;
  config.command = Command::price;
  config.capacity_path = kFixtures + "/cap_wide_spread.json";
  config.payoff_paths = {kFixtures + "/payoff_single_a.json"};

  const Outcome text = run(config);
  CHECK(text.code == cli::kExitClean);
  CHECK(text.err.empty());
  CHECK(text.out.find("ask") != std::string::npos);
  CHECK(text.out.find("0.6") != std::string::npos);
  CHECK(text.out.find("0.4") != std::string::npos);

  config.format = OutputFormat::json;
  const Outcome doc = run(config);
  CHECK(doc.code == cli::kExitClean);
  const json parsed = parse(doc.out);
  CHECK(parsed["payoffs"][0]["ask"].get<double>() == doctest::Approx(0.6));
  CHECK(parsed["payoffs"][0]["bid"].get<double>() == doctest::Approx(0.4));
  CHECK(parsed["meta"]["rule"] == "choquet");
  CHECK(parsed["meta"]["capacity_digest"].get<std::string>().size() == 16);
}

TEST_CASE("price without payoffs is an input error") {
  RunConfig config;
  config.command = Command::price;
  config.capacity_path = kFixtures + "/cap_wide_spread.json";
  const Outcome result = run(config);
  CHECK(result.code == cli::kExitInput);
  CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("missing capacity file exits with an input error") {
  RunConfig config;
  config.command = Command::arbitrage;
  config.capacity_path = "/tmp/capric_cli_does_not_exist.json";
  const Outcome result = run(config);
  CHECK(result.code == cli::kExitInput);
  CHECK(result.out.empty());
}

TEST_CASE("parity sweep flags cpp and passes pcp on the wide book") {
  RunConfig config;
  config.command = Command::parity;
  config.capacity_path = kFixtures + "/cap_wide_spread.json";
  config.sweep_payoff_count = 60;

  config.parity_kind = ParityKind::pcp;
  CHECK(run(config).code == cli::kExitClean);

  config.parity_kind = ParityKind::cpp;
  const Outcome cpp = run(config);
  CHECK(cpp.code == cli::kExitFinding);
  CHECK(cpp.out.find("FAIL") != std::string::npos);

  config.parity_kind.reset();
  CHECK(run(config).code == cli::kExitInput);
}

TEST_CASE("arbitrage json matches the documented shape") {
  RunConfig config;
  config.command = Command::arbitrage;
  config.format = OutputFormat::json;

  config.capacity_path = kFixtures + "/cap_crossed.json";
  const Outcome bad = run(config);
  CHECK(bad.code == cli::kExitFinding);
  const json verdict = parse(bad.out);
  CHECK(verdict["status"] == "arbitrage");
  REQUIRE(verdict.contains("certificate"));
  CHECK(verdict["certificate"]["bond_leg"].get<int>() == -1);
  CHECK(verdict["certificate"]["cost"].get<double>() == doctest::Approx(-0.4));
  const json& legs = verdict["certificate"]["legs"];
  REQUIRE(legs.size() == 2);
  CHECK(legs[0]["a"].get<double>() == doctest::Approx(1.0));
  CHECK(legs[0]["set"][0] == "a");

  config.capacity_path = kFixtures + "/cap_wide_spread.json";
  const Outcome good = run(config);
  CHECK(good.code == cli::kExitClean);
  const json free = parse(good.out);
  CHECK(free["status"] == "arbitrage_free");
  REQUIRE(free.contains("measure"));
  CHECK(free["measure"]["a"].get<double>() +
            free["measure"]["b"].get<double>() ==
        doctest::Approx(1.0));
}

TEST_CASE("exact flag keeps the crossed certificate at exactly -0.4") {
  RunConfig config;
  config.command = Command::arbitrage;
  config.capacity_path = kFixtures + "/cap_crossed.json";
  config.exact = true;
  config.format = OutputFormat::json;
  const Outcome result = run(config);
  CHECK(result.code == cli::kExitFinding);
  CHECK(parse(result.out)["certificate"]["cost"].get<double>() == -0.4);
}

TEST_CASE("byte-identical reruns") {
  RunConfig config;
  config.command = Command::report;
  config.capacity_path = kFixtures + "/cap_symmetric3.json";
  config.rule_kind = RuleKind::sipos;
  config.sweep_payoff_count = 40;
  config.seed = 3;
  config.format = OutputFormat::json;

  const Outcome first = run(config);
  const Outcome second = run(config);
  CHECK(first.code == second.code);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}

TEST_CASE("report on the symmetric book contrasts the two rules") {
  RunConfig config;
  config.command = Command::report;
  config.capacity_path = kFixtures + "/cap_symmetric3.json";
  config.sweep_payoff_count = 40;

  config.rule_kind = RuleKind::sipos;
  const Outcome sipos = run(config);
  CHECK(sipos.code == cli::kExitFinding);  // arbitrage under sipos
  CHECK(sipos.out.find("arbitrage") != std::string::npos);
  CHECK(sipos.out.find("parity CPP") != std::string::npos);

  config.rule_kind = RuleKind::choquet;
  const Outcome choquet = run(config);
  CHECK(choquet.code == cli::kExitFinding);
}

TEST_CASE("spread command prints the sandwich") {
  RunConfig config;
  config.command = Command::spread;
  config.capacity_path = kFixtures + "/cap_wide_spread.json";
  config.payoff_paths = {kFixtures + "/payoff_long_short.json"};
  const Outcome result = run(config);
  CHECK(result.code == cli::kExitClean);
  CHECK(result.out.find("bid") != std::string::npos);
  CHECK(result.out.find("ask") != std::string::npos);
  CHECK(result.out.find("PASS") != std::string::npos);

  config.capacity_path = kFixtures + "/cap_crossed.json";
  config.payoff_paths.clear();
  CHECK(run(config).code == cli::kExitFinding);
}

TEST_CASE("generate writes a loadable capacity") {
  const std::string path = "/tmp/capric_cli_generated.json";
  RunConfig config;
  config.command = Command::generate;
  config.generator_kind = "distortion";
  config.generator_states = {"u", "d"};
  config.generator_weights = {1.0, 1.0};
  config.generator_gamma = 0.5;
  config.output_path = path;

  const Outcome result = run(config);
  CHECK(result.code == cli::kExitClean);
  CHECK(result.out.find(path) != std::string::npos);

  const io::LoadedCapacity loaded = io::load_capacity(path);
  CHECK(loaded.capacity.at(0b01u) == doctest::Approx(std::sqrt(0.5)));
  std::remove(path.c_str());

  config.generator_kind = "unknown";
  CHECK(run(config).code == cli::kExitInput);
}
