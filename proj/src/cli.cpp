#include "capric/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "capric/arbitrage.hpp"
#include "capric/errors.hpp"
#include "capric/io.hpp"
#include "capric/version.hpp"

namespace capric::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

std::string payoff_text(const Payoff& x) {
  std::string out = "(";
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += fmt(x[i]);
  }
  out += ")";
  return out;
}

json meta_json(const RunConfig& config, bool with_seed) {
  json meta;
  meta["version"] = kVersion;
  meta["rule"] = to_string(config.rule_kind);
  meta["tolerance"] = config.tolerance;
  if (with_seed) meta["seed"] = config.seed;
  if (!config.capacity_path.empty()) {
    meta["capacity_digest"] = io::file_digest(config.capacity_path);
  }
  if (!config.payoff_paths.empty()) {
    json digests = json::array();
    for (const std::string& path : config.payoff_paths) {
      digests.push_back(io::file_digest(path));
    }
    meta["payoff_digests"] = std::move(digests);
  }
  return meta;
}

void emit(const json& doc, std::ostream& out) {
  out << io::stable_dump(doc) << '\n';
}

AnticoreOptions anticore_options(const RunConfig& config,
                                 const io::LoadedCapacity& loaded) {
  AnticoreOptions options;
  options.exact = config.exact;
  if (config.exact) options.exact_table = loaded.exact_table;
  return options;
}

struct SweepPlan {
  std::vector<Payoff> payoffs;
  bool from_files = false;
};

SweepPlan sweep_plan(const RunConfig& config, const StateSpacePtr& space,
                     const std::vector<Payoff>& file_payoffs) {
  if (!file_payoffs.empty()) return SweepPlan{file_payoffs, true};
  return SweepPlan{
      sweep_payoffs(space, config.sweep_payoff_count, config.seed), false};
}

SweepSummary run_sweep(const PricingRule& rule, ParityKind kind,
                       const SweepPlan& plan, double tol) {
  SweepSummary summary;
  summary.parity = kind;
  for (const Payoff& x : plan.payoffs) {
    for (double k : sweep_strikes(x)) {
      ParityCheck check = check_parity(rule, kind, x, k, tol);
      summary.checked += 1;
      summary.max_abs_residual =
          std::max(summary.max_abs_residual, std::abs(check.residual));
      if (!check.pass) summary.failures.push_back(std::move(check));
    }
  }
  return summary;
}

json sweep_json(const SweepSummary& summary, std::size_t example_cap) {
  json doc;
  doc["parity"] = to_string(summary.parity);
  doc["checked"] = summary.checked;
  doc["failures"] = summary.failures.size();
  doc["max_abs_residual"] = summary.max_abs_residual;
  doc["pass"] = summary.clean();
  json examples = json::array();
  for (std::size_t i = 0; i < summary.failures.size() && i < example_cap; ++i) {
    const ParityCheck& check = summary.failures[i];
    examples.push_back(json{{"payoff", check.x.values()},
                            {"strike", check.strike},
                            {"lhs", check.lhs},
                            {"rhs", check.rhs},
                            {"residual", check.residual}});
  }
  doc["examples"] = std::move(examples);
  return doc;
}

void sweep_text(const SweepSummary& summary, std::ostream& out,
                std::size_t example_cap) {
  out << "parity " << to_string(summary.parity) << ": checked "
      << summary.checked << ", failures " << summary.failures.size()
      << ", max |residual| " << fmt(summary.max_abs_residual) << '\n';
  for (std::size_t i = 0; i < summary.failures.size() && i < example_cap; ++i) {
    const ParityCheck& check = summary.failures[i];
    out << "  example: payoff " << payoff_text(check.x) << " strike "
        << fmt(check.strike) << ": lhs " << fmt(check.lhs) << " rhs "
        << fmt(check.rhs) << " residual " << fmt(check.residual) << '\n';
  }
}

const char* parity_note(ParityKind kind) {
  switch (kind) {
    case ParityKind::cpp:
      return "note: the CPP residual equals spread(put) - spread(underlying); "
             "it vanishes on every payoff only when each subset and its "
             "complement quote to the total mass.";
    case ParityKind::dcpstar:
      return "note: the DCP* residual equals -spread(discount certificate); "
             "it vanishes on every payoff only when each subset and its "
             "complement quote to the total mass.";
    default:
      return nullptr;
  }
}

json witness_json(const AdditiveMeasure& witness) {
  json doc = json::object();
  for (int i = 0; i < witness.space->size(); ++i) {
    doc[witness.space->state_name(i)] = witness.weights[i];
  }
  return doc;
}

std::string witness_text(const AdditiveMeasure& witness) {
  std::string out;
  for (int i = 0; i < witness.space->size(); ++i) {
    if (i) out += ", ";
    out += witness.space->state_name(i) + " = " + fmt(witness.weights[i]);
  }
  return out;
}

json certificate_json(const ArbitrageCertificate& cert) {
  json legs = json::array();
  for (const CertificateLeg& leg : cert.legs) {
    legs.push_back(json{{"a", leg.coefficient},
                        {"set", cert.space->names_of(leg.subset)}});
  }
  return json{{"legs", std::move(legs)},
              {"bond_leg", cert.bond_coefficient},
              {"cost", cert.cost}};
}

void certificate_text(const ArbitrageCertificate& cert, double replayed,
                      std::ostream& out) {
  const bool shorted = cert.bond_coefficient < 0;
  out << "certificate (" << (shorted ? "long legs, short bond"
                                     : "short legs, long bond")
      << "):\n";
  for (const CertificateLeg& leg : cert.legs) {
    out << "  " << (shorted ? "+" : "-") << fmt(leg.coefficient) << " x 1_"
        << cert.space->subset_label(leg.subset) << '\n';
  }
  out << "  " << (shorted ? "-" : "+") << "1 x bond\n";
  out << "  cost " << fmt(cert.cost) << ", replayed portfolio price sum "
      << fmt(replayed) << '\n';
  out << "note: the portfolio never pays below zero and costs "
      << fmt(cert.cost) << " today.\n";
}

struct PriceRows {
  json rows = json::array();
  double riskless = 0.0;
};

PriceRows price_rows(const RunConfig& config, const PricingRule& rule,
                     const std::vector<Payoff>& payoffs) {
  PriceRows out;
  out.riskless = riskless_rate(rule.capacity());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    PricingReport report = price_report(rule, payoffs[i],
                                        config.payoff_paths[i],
                                        config.tolerance);
    out.rows.push_back(json{{"id", report.payoff_id},
                            {"ask", report.ask},
                            {"bid", report.bid},
                            {"spread", report.spread},
                            {"symmetric", report.sipos_value}});
  }
  return out;
}

void price_rows_text(const PriceRows& rows, std::ostream& out) {
  for (const json& row : rows.rows) {
    out << "payoff " << row["id"].get<std::string>() << ":\n"
        << "  ask        " << fmt(row["ask"].get<double>()) << '\n'
        << "  bid        " << fmt(row["bid"].get<double>()) << '\n'
        << "  spread     " << fmt(row["spread"].get<double>()) << '\n'
        << "  symmetric  " << fmt(row["symmetric"].get<double>()) << '\n';
  }
}

int run_price(const RunConfig& config, const io::LoadedCapacity& loaded,
              const std::vector<Payoff>& payoffs, std::ostream& out) {
  if (payoffs.empty()) {
    throw input_error("price: at least one payoff file is required");
  }
  PricingRule rule(config.rule_kind, loaded.capacity);
  PriceRows rows = price_rows(config, rule, payoffs);

  if (config.format == OutputFormat::json) {
    json doc;
    doc["command"] = "price";
    doc["meta"] = meta_json(config, false);
    doc["riskless_rate"] = rows.riskless;
    doc["payoffs"] = std::move(rows.rows);
    emit(doc, out);
  } else {
    out << "rule " << to_string(config.rule_kind) << ", riskless rate "
        << fmt(rows.riskless) << '\n';
    price_rows_text(rows, out);
  }
  return kExitClean;
}

int run_spread(const RunConfig& config, const io::LoadedCapacity& loaded,
               const std::vector<Payoff>& payoffs, std::ostream& out) {
  PricingRule rule(config.rule_kind, loaded.capacity);
  const bool dominates =
      loaded.capacity.dominates_conjugate(config.tolerance);
  const SpreadScan scan =
      nonneg_spread_check(loaded.capacity, config.tolerance);

  json payoff_rows = json::array();
  bool payoff_fail = false;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const double ask = rule.ask(payoffs[i]);
    const double bid = rule.bid(payoffs[i]);
    const double sym = sipos_price(loaded.capacity, payoffs[i]);
    payoff_rows.push_back(json{{"id", config.payoff_paths[i]},
                               {"bid", bid},
                               {"sipos", sym},
                               {"ask", ask},
                               {"spread", ask - bid}});
    if (ask - bid < -config.tolerance) payoff_fail = true;
  }
  const bool pass = scan.pass && !payoff_fail;

  if (config.format == OutputFormat::json) {
    json doc;
    doc["command"] = "spread";
    doc["meta"] = meta_json(config, false);
    doc["dominates_conjugate"] = dominates;
    json indicator;
    indicator["min_buy_sell_sum"] = scan.min_buy_sell_sum;
    indicator["pass"] = scan.pass;
    indicator["violating_set"] =
        scan.violating_set
            ? json(loaded.capacity.space()->subset_key(*scan.violating_set))
            : json();
    doc["indicator_scan"] = std::move(indicator);
    doc["payoff_spreads"] = std::move(payoff_rows);
    doc["pass"] = pass;
    emit(doc, out);
  } else {
    out << "dominates conjugate: " << (dominates ? "yes" : "no") << '\n';
    out << "indicator spreads: min v(A) + v(A^c) - v(full) = "
        << fmt(scan.min_buy_sell_sum);
    if (scan.violating_set) {
      out << " at "
          << loaded.capacity.space()->subset_label(*scan.violating_set);
    }
    out << '\n';
    for (const json& row : payoff_rows) {
      out << "payoff " << row["id"].get<std::string>() << ": bid "
          << fmt(row["bid"].get<double>()) << " <= sipos "
          << fmt(row["sipos"].get<double>()) << " <= ask "
          << fmt(row["ask"].get<double>()) << " (spread "
          << fmt(row["spread"].get<double>()) << ")\n";
    }
    if (pass) {
      out << "PASS: all quoted spreads nonnegative\n";
    } else {
      out << "FAIL: negative spread detected\n";
      if (scan.violating_set) {
        const auto& space = *loaded.capacity.space();
        out << "note: buy 1_" << space.subset_label(*scan.violating_set)
            << " and 1_"
            << space.subset_label(space.complement(*scan.violating_set))
            << ", short the bond: riskless gain "
            << fmt(-scan.min_buy_sell_sum) << " today.\n";
      }
    }
  }
  return pass ? kExitClean : kExitFinding;
}

int run_parity(const RunConfig& config, const io::LoadedCapacity& loaded,
               const std::vector<Payoff>& payoffs, std::ostream& out) {
  if (!config.parity_kind) {
    throw input_error("parity: choose one of pcp, cpp, dcp, dcpstar");
  }
  PricingRule rule(config.rule_kind, loaded.capacity);
  const SweepPlan plan = sweep_plan(config, rule.space(), payoffs);
  const SweepSummary summary =
      run_sweep(rule, *config.parity_kind, plan, config.tolerance);

  if (config.format == OutputFormat::json) {
    json doc;
    doc["command"] = "parity";
    doc["meta"] = meta_json(config, !plan.from_files);
    doc["sweep"] = sweep_json(summary, 3);
    emit(doc, out);
  } else {
    out << "rule " << to_string(config.rule_kind) << '\n';
    sweep_text(summary, out, 3);
    if (!summary.clean()) {
      if (const char* note = parity_note(summary.parity)) {
        out << note << '\n';
      }
      out << "FAIL\n";
    } else {
      out << "PASS (a sweep can refute a parity, not prove it)\n";
    }
  }
  return summary.clean() ? kExitClean : kExitFinding;
}

int run_arbitrage(const RunConfig& config, const io::LoadedCapacity& loaded,
                  std::ostream& out) {
  PricingRule rule(config.rule_kind, loaded.capacity);
  const ArbitrageVerdict verdict =
      check_af(rule, anticore_options(config, loaded));

  double replayed = 0.0;
  if (verdict.certificate) {
    replayed = portfolio_price_sum(rule, verdict.certificate->portfolio());
  }

  if (config.format == OutputFormat::json) {
    json doc;
    doc["command"] = "arbitrage";
    doc["meta"] = meta_json(config, false);
    doc["exact"] = config.exact;
    doc["status"] = verdict.status == AfStatus::arbitrage_free
                        ? "arbitrage_free"
                        : "arbitrage";
    doc["measure"] = verdict.witness ? witness_json(*verdict.witness) : json();
    doc["certificate"] = verdict.certificate
                             ? certificate_json(*verdict.certificate)
                             : json();
    doc["replayed_cost"] = verdict.certificate ? json(replayed) : json();
    emit(doc, out);
  } else {
    out << "rule " << to_string(config.rule_kind) << ": "
        << (verdict.status == AfStatus::arbitrage_free ? "arbitrage-free"
                                                       : "arbitrage")
        << (config.exact ? " (exact arithmetic)" : "") << '\n';
    if (verdict.witness) {
      out << "risk-neutral measure: " << witness_text(*verdict.witness)
          << '\n';
    }
    if (verdict.certificate) {
      certificate_text(*verdict.certificate, replayed, out);
    }
  }
  return verdict.status == AfStatus::arbitrage_free ? kExitClean
                                                    : kExitFinding;
}

int run_generate(const RunConfig& config, std::ostream& out) {
  if (config.generator_states.empty()) {
    throw input_error("generate: at least one state name is required");
  }
  StateSpacePtr space = make_space(config.generator_states);

  std::optional<Capacity> capacity;
  if (config.generator_kind == "additive") {
    capacity = Capacity::additive(space, config.generator_weights);
  } else if (config.generator_kind == "distortion") {
    capacity = Capacity::distortion(space, config.generator_weights,
                                    config.generator_gamma);
  } else if (config.generator_kind == "epsilon_contamination") {
    capacity = Capacity::epsilon_contamination(space, config.generator_weights,
                                               config.generator_epsilon);
  } else {
    throw input_error("generate: unknown kind '" + config.generator_kind +
                      "' (additive, distortion, epsilon_contamination)");
  }

  if (config.output_path.empty()) {
    emit(io::capacity_to_json(*capacity), out);
  } else {
    io::save_capacity(*capacity, config.output_path);
    if (config.format == OutputFormat::json) {
      emit(json{{"command", "generate"}, {"written", config.output_path}},
           out);
    } else {
      out << "wrote " << config.output_path << '\n';
    }
  }
  return kExitClean;
}

int run_report(const RunConfig& config, const io::LoadedCapacity& loaded,
               const std::vector<Payoff>& payoffs, std::ostream& out) {
  const Capacity& v = loaded.capacity;
  PricingRule rule(config.rule_kind, v);

  std::optional<bool> concave;
  try {
    concave = v.is_concave(config.tolerance);
  } catch (const budget_error&) {
    concave = std::nullopt;
  }

  const SpreadScan scan = nonneg_spread_check(v, config.tolerance);

  const SweepPlan plan = sweep_plan(config, rule.space(), payoffs);
  std::vector<SweepSummary> sweeps;
  for (ParityKind kind : {ParityKind::pcp, ParityKind::cpp, ParityKind::dcp,
                          ParityKind::dcpstar}) {
    sweeps.push_back(run_sweep(rule, kind, plan, config.tolerance));
  }
  bool parity_fail = false;
  for (const SweepSummary& s : sweeps) parity_fail |= !s.clean();

  const ArbitrageVerdict verdict =
      check_af(rule, anticore_options(config, loaded));
  double replayed = 0.0;
  if (verdict.certificate) {
    replayed = portfolio_price_sum(rule, verdict.certificate->portfolio());
  }

  const bool pass = scan.pass && !parity_fail &&
                    verdict.status == AfStatus::arbitrage_free;

  if (config.format == OutputFormat::json) {
    json doc;
    doc["command"] = "report";
    doc["meta"] = meta_json(config, true);
    json cap;
    cap["states"] = v.states();
    cap["total_mass"] = v.total();
    cap["riskless_rate"] = riskless_rate(v);
    cap["additive"] = v.is_additive(config.tolerance);
    cap["auto_conjugate"] = v.is_auto_conjugate(config.tolerance);
    cap["concave"] = concave ? json(*concave) : json();
    cap["dominates_conjugate"] = v.dominates_conjugate(config.tolerance);
    doc["capacity"] = std::move(cap);
    json indicator;
    indicator["min_buy_sell_sum"] = scan.min_buy_sell_sum;
    indicator["pass"] = scan.pass;
    indicator["violating_set"] =
        scan.violating_set ? json(v.space()->subset_key(*scan.violating_set))
                           : json();
    doc["spread_scan"] = std::move(indicator);
    json parities = json::array();
    for (const SweepSummary& s : sweeps) parities.push_back(sweep_json(s, 2));
    doc["parities"] = std::move(parities);
    json arb;
    arb["status"] = verdict.status == AfStatus::arbitrage_free
                        ? "arbitrage_free"
                        : "arbitrage";
    arb["measure"] = verdict.witness ? witness_json(*verdict.witness) : json();
    arb["certificate"] = verdict.certificate
                             ? certificate_json(*verdict.certificate)
                             : json();
    arb["replayed_cost"] = verdict.certificate ? json(replayed) : json();
    doc["arbitrage"] = std::move(arb);
    if (!payoffs.empty()) {
      doc["payoffs"] = price_rows(config, rule, payoffs).rows;
    }
    doc["pass"] = pass;
    emit(doc, out);
  } else {
    out << "capacity " << config.capacity_path << " (" << v.states()
        << " states, total mass " << fmt(v.total()) << ")\n";
    out << "classification: additive="
        << (v.is_additive(config.tolerance) ? "yes" : "no")
        << " auto-conjugate="
        << (v.is_auto_conjugate(config.tolerance) ? "yes" : "no")
        << " concave="
        << (concave ? (*concave ? "yes" : "no") : "not checked")
        << " dominates-conjugate="
        << (v.dominates_conjugate(config.tolerance) ? "yes" : "no") << '\n';
    out << "riskless rate: " << fmt(riskless_rate(v)) << '\n';
    out << "spread scan: min v(A) + v(A^c) - v(full) = "
        << fmt(scan.min_buy_sell_sum) << (scan.pass ? ", pass" : ", FAIL")
        << '\n';
    out << "parity sweeps (rule " << to_string(config.rule_kind) << "):\n";
    for (const SweepSummary& s : sweeps) {
      out << "  ";
      sweep_text(s, out, 1);
    }
    out << "arbitrage (rule " << to_string(config.rule_kind) << "): "
        << (verdict.status == AfStatus::arbitrage_free ? "arbitrage-free"
                                                       : "arbitrage")
        << '\n';
    if (verdict.witness) {
      out << "risk-neutral measure: " << witness_text(*verdict.witness)
          << '\n';
    }
    if (verdict.certificate) {
      certificate_text(*verdict.certificate, replayed, out);
    }
    if (!payoffs.empty()) {
      out << "prices:\n";
      price_rows_text(price_rows(config, rule, payoffs), out);
    }
    const bool pcp_ok = sweeps[0].clean();
    const bool cpp_ok = sweeps[1].clean();
    const bool dcp_ok = sweeps[2].clean();
    if (verdict.status == AfStatus::arbitrage) {
      out << "interpretation: the quotes admit a static arbitrage; the "
             "certificate trade funds itself today and owes nothing "
             "tomorrow.\n";
    } else if (!cpp_ok && pcp_ok && dcp_ok && scan.pass) {
      out << "interpretation: puts are cheaper bought than replicated (CPP "
             "fails) while PCP holds and spreads stay nonnegative - the "
             "signature of two-sided quoting.\n";
    } else if (pass) {
      out << "interpretation: every check is consistent with pricing by a "
             "single additive measure up to the quoted spreads.\n";
    } else {
      out << "interpretation: see the failing checks above.\n";
    }
    out << "verdict: " << (pass ? "CLEAN" : "FINDINGS") << '\n';
  }
  return pass ? kExitClean : kExitFinding;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::generate) {
      return run_generate(config, out);
    }
    if (config.capacity_path.empty()) {
      throw input_error("a capacity file is required");
    }
    const io::LoadedCapacity loaded = io::load_capacity(config.capacity_path);
    std::vector<Payoff> payoffs;
    payoffs.reserve(config.payoff_paths.size());
    for (const std::string& path : config.payoff_paths) {
      payoffs.push_back(io::load_payoff(path, loaded.capacity.space()));
    }

    switch (config.command) {
      case Command::price:
        return run_price(config, loaded, payoffs, out);
      case Command::spread:
        return run_spread(config, loaded, payoffs, out);
      case Command::parity:
        return run_parity(config, loaded, payoffs, out);
      case Command::arbitrage:
        return run_arbitrage(config, loaded, out);
      case Command::report:
        return run_report(config, loaded, payoffs, out);
      case Command::generate:
        break;
    }
    throw std::logic_error("unreachable command");
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace capric::cli
