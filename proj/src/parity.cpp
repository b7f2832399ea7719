#include "capric/parity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "capric/errors.hpp"

namespace capric {

namespace {

ParityCheck make_check(ParityKind kind, const Payoff& x, double strike,
                       double lhs, double rhs, double tol) {
  const double residual = lhs - rhs;
  return ParityCheck{kind,     x,   strike, lhs,
                     rhs,      residual,
                     std::abs(residual) <= tol};
}

void require_strike(double strike) {
  if (!(strike >= 0.0) || !std::isfinite(strike)) {
    throw input_error("parity: strike must be finite and >= 0");
  }
}

}  // namespace

std::string to_string(ParityKind kind) {
  switch (kind) {
    case ParityKind::pcp: return "PCP";
    case ParityKind::cpp: return "CPP";
    case ParityKind::dcp: return "DCP";
    case ParityKind::dcpstar: return "DCPSTAR";
  }
  throw std::logic_error("unreachable parity kind");
}

ParityKind parse_parity_kind(const std::string& text) {
  if (text == "pcp" || text == "PCP") return ParityKind::pcp;
  if (text == "cpp" || text == "CPP") return ParityKind::cpp;
  if (text == "dcp" || text == "DCP") return ParityKind::dcp;
  if (text == "dcpstar" || text == "DCPSTAR" || text == "dcp*" ||
      text == "DCP*") {
    return ParityKind::dcpstar;
  }
  throw input_error("unknown parity kind '" + text +
                    "' (pcp, cpp, dcp, dcpstar)");
}

ParityCheck check_pcp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol) {
  require_strike(strike);
  const Payoff c = call_payoff(x, strike);
  const Payoff p = put_payoff(x, strike);
  const Payoff bond = constant(x.space(), strike);
  const double lhs = rule.price(x);
  const double rhs = rule.price(c) + rule.price(-p) + rule.price(bond);
  return make_check(ParityKind::pcp, x, strike, lhs, rhs, tol);
}

ParityCheck check_cpp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol) {
  require_strike(strike);
  const Payoff c = call_payoff(x, strike);
  const Payoff p = put_payoff(x, strike);
  const Payoff bond = constant(x.space(), strike);
  const double lhs = rule.price(p);
  const double rhs = rule.price(c) + rule.price(-x) + rule.price(bond);
  return make_check(ParityKind::cpp, x, strike, lhs, rhs, tol);
}

ParityCheck check_dcp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol) {
  require_strike(strike);
  const Payoff c = call_payoff(x, strike);
  const Payoff d = discount_certificate(x, strike);
  const double lhs = rule.price(x);
  const double rhs = rule.price(c) + rule.price(d);
  return make_check(ParityKind::dcp, x, strike, lhs, rhs, tol);
}

ParityCheck check_dcp_star(const PricingRule& rule, const Payoff& x,
                           double strike, double tol) {
  require_strike(strike);
  const Payoff c = call_payoff(x, strike);
  const Payoff d = discount_certificate(x, strike);
  const double lhs = rule.price(c);
  const double rhs = rule.price(x) + rule.price(-d);
  return make_check(ParityKind::dcpstar, x, strike, lhs, rhs, tol);
}

ParityCheck check_parity(const PricingRule& rule, ParityKind kind,
                         const Payoff& x, double strike, double tol) {
  switch (kind) {
    case ParityKind::pcp: return check_pcp(rule, x, strike, tol);
    case ParityKind::cpp: return check_cpp(rule, x, strike, tol);
    case ParityKind::dcp: return check_dcp(rule, x, strike, tol);
    case ParityKind::dcpstar: return check_dcp_star(rule, x, strike, tol);
  }
  throw std::logic_error("unreachable parity kind");
}

SweepSummary sweep(const PricingRule& rule, ParityKind kind,
                   const std::vector<Payoff>& payoffs,
                   const std::vector<double>& strikes, double tol) {
  SweepSummary summary;
  summary.parity = kind;
  for (const Payoff& x : payoffs) {
    for (double k : strikes) {
      ParityCheck check = check_parity(rule, kind, x, k, tol);
      summary.checked += 1;
      summary.max_abs_residual =
          std::max(summary.max_abs_residual, std::abs(check.residual));
      if (!check.pass) summary.failures.push_back(std::move(check));
    }
  }
  return summary;
}

std::vector<Payoff> sweep_payoffs(const StateSpacePtr& space,
                                  std::size_t count, std::uint64_t seed) {
  if (!space) throw input_error("sweep: null state space");
  if (space->size() > kMaxSweepStates) {
    throw budget_error("parity sweeps support at most " +
                       std::to_string(kMaxSweepStates) + " states, got " +
                       std::to_string(space->size()));
  }
  std::vector<Payoff> out;
  out.reserve(count);

  const SubsetMask full = space->full_mask();
  for (SubsetMask m = 0; m <= full; ++m) out.push_back(indicator(space, m));
  for (SubsetMask m = 1; m <= full; ++m) out.push_back(-indicator(space, m));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cont(-3.0, 3.0);
  std::uniform_int_distribution<int> half(-5, 5);

  const int n = space->size();
  for (std::size_t i = 0; i < 50 && out.size() < count; ++i) {
    std::vector<double> values(n);
    for (double& v : values) v = cont(rng);
    out.emplace_back(space, std::move(values));
  }
  while (out.size() < count) {
    std::vector<double> values(n);
    for (double& v : values) v = 0.5 * half(rng);
    out.emplace_back(space, std::move(values));
  }
  return out;
}

std::vector<double> sweep_strikes(const Payoff& x) {
  return {0.0, 0.5, 1.0, 2.0, std::max(0.0, max_value(x) + 1.0)};
}

SweepSummary default_sweep(const PricingRule& rule, ParityKind kind,
                           std::size_t payoff_count, std::uint64_t seed,
                           double tol) {
  SweepSummary summary;
  summary.parity = kind;
  for (const Payoff& x : sweep_payoffs(rule.space(), payoff_count, seed)) {
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

}  // namespace capric
