#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capric/pricing.hpp"

namespace capric {

enum class ParityKind { pcp, cpp, dcp, dcpstar };

std::string to_string(ParityKind kind);
ParityKind parse_parity_kind(const std::string& text);

/// One parity check at a payoff/strike pair. residual = lhs - rhs and the
/// check passes when |residual| <= tol. The four identities, with
/// c = (x - k1)+, p = (k1 - x)+, d = x ^ k1:
///
///   pcp      f(x) = f(c) + f(-p) + f(k1)
///   cpp      f(p) = f(c) + f(-x) + f(k1)
///   dcp      f(x) = f(c) + f(d)
///   dcpstar  f(c) = f(x) + f(-d)
struct ParityCheck {
  ParityKind parity;
  Payoff x;
  double strike;
  double lhs;
  double rhs;
  double residual;
  bool pass;
};

ParityCheck check_pcp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol = kDefaultTol);
ParityCheck check_cpp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol = kDefaultTol);
ParityCheck check_dcp(const PricingRule& rule, const Payoff& x, double strike,
                      double tol = kDefaultTol);
ParityCheck check_dcp_star(const PricingRule& rule, const Payoff& x,
                           double strike, double tol = kDefaultTol);
ParityCheck check_parity(const PricingRule& rule, ParityKind kind,
                         const Payoff& x, double strike,
                         double tol = kDefaultTol);

struct SweepSummary {
  ParityKind parity;
  std::size_t checked = 0;
  std::vector<ParityCheck> failures;
  double max_abs_residual = 0.0;
  bool clean() const { return failures.empty(); }
};

/// Cartesian product of the given payoffs and strikes.
SweepSummary sweep(const PricingRule& rule, ParityKind kind,
                   const std::vector<Payoff>& payoffs,
                   const std::vector<double>& strikes,
                   double tol = kDefaultTol);

/// Sweeps enumerate every indicator, so they stop at 16 states.
inline constexpr int kMaxSweepStates = 16;

/// Deterministic sweep payoff set: every indicator and negated indicator,
/// 50 payoffs uniform in [-3, 3], and half-integer payoffs (integers in
/// [-5, 5] scaled by 0.5) filling up to `count`. Seeded, reproducible.
/// budget_error above kMaxSweepStates states.
std::vector<Payoff> sweep_payoffs(const StateSpacePtr& space,
                                  std::size_t count, std::uint64_t seed);

/// Strike grid per payoff: {0, 0.5, 1, 2, max(x) + 1}.
std::vector<double> sweep_strikes(const Payoff& x);

/// sweep() over sweep_payoffs x sweep_strikes. A sweep can only refute a
/// parity, never prove it: a clean run means no counterexample was found in
/// `checked` cases.
SweepSummary default_sweep(const PricingRule& rule, ParityKind kind,
                           std::size_t payoff_count, std::uint64_t seed,
                           double tol = kDefaultTol);

}  // namespace capric
