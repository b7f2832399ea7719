#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "capric/exact.hpp"
#include "capric/parity.hpp"
#include "capric/pricing.hpp"

namespace capric {

/// Additive measure on the states, given by one nonnegative weight each.
struct AdditiveMeasure {
  StateSpacePtr space;
  std::vector<double> weights;

  double of(SubsetMask m) const;
  double total() const;
};

struct CertificateLeg {
  double coefficient = 0.0;  // > 0
  SubsetMask subset = 0;
};

/// Static arbitrage portfolio made of indicator bets plus a bond position.
///
/// With bond_coefficient = -1 (the standard shape) the portfolio is
/// { +a_i 1_{A_i} } plus a short bond -1_full: the legs cover the bond,
/// sum_i a_i 1_{A_i} >= 1_full pointwise, yet the total price
/// cost = sum_i a_i v(A_i) - v(full) is negative.
///
/// With bond_coefficient = +1 the positions flip: { -a_i 1_{A_i} } plus a
/// long bond, legs dominated by the bond, cost = v(full) - sum_i a_i v(A_i).
/// This variant arises only for symmetric (sipos) rules, whose short legs
/// are priced at -a_i v(A_i).
struct ArbitrageCertificate {
  StateSpacePtr space;
  std::vector<CertificateLeg> legs;
  double bond_coefficient = -1.0;
  double cost = 0.0;

  /// The certificate as an explicit list of payoffs, ready to replay.
  std::vector<Payoff> portfolio() const;
};

enum class AfStatus { arbitrage_free, arbitrage };

/// Exactly one of witness / certificate is set, matching status.
struct ArbitrageVerdict {
  AfStatus status = AfStatus::arbitrage_free;
  std::optional<AdditiveMeasure> witness;
  std::optional<ArbitrageCertificate> certificate;
};

struct AnticoreOptions {
  /// Acceptance band for the LP decision and witness verification.
  double feasibility_tol = 1e-8;
  /// Certificate legs below this weight are dropped.
  double prune_tol = 1e-12;
  /// Run the LP in exact rational arithmetic.
  bool exact = false;
  /// Exact capacity values (e.g. decimal strings from a file). When absent
  /// in exact mode, table doubles are used at their exact dyadic values.
  std::shared_ptr<const std::vector<Rational>> exact_table;
};

/// Hard cap on the LP: 2^n - 1 cover columns must stay enumerable.
inline constexpr int kMaxLpStates = 16;

/// Searches for an additive measure mu with mu(A) <= v(A) on every proper
/// nonempty A and mu(full) = v(full): the anticore of v, equivalently the
/// core of the conjugate. Solved via the covering dual
///
///   minimize sum_A y_A v(A)  s.t.  sum_{A contains w} y_A >= 1 per state w
///
/// whose optimum tau equals the largest attainable mu(full); the anticore is
/// nonempty iff tau >= v(full) - feasibility_tol, and the optimal row duals
/// are the measure. The returned witness is re-verified against all 2^n
/// constraints; a witness that fails verification raises solver_error rather
/// than being returned.
std::optional<AdditiveMeasure> anticore_element(
    const Capacity& v, const AnticoreOptions& options = {});

/// Balanced-family certificate for an empty anticore: the optimal cover
/// weights y of the dual LP, pruned below prune_tol, with short bond and
/// cost = sum y_A v(A) - v(full) < 0. Throws std::logic_error when the
/// anticore is nonempty.
ArbitrageCertificate extract_certificate(const Capacity& v,
                                         const AnticoreOptions& options = {});

/// Arbitrage decision per rule kind:
///   choquet  free iff the anticore is nonempty;
///   sipos    free iff v is additive; a nonadditive v always admits a
///            two-indicator round trip one way or the other;
///   linear   always free.
/// Arbitrage verdicts carry an explicit certificate, free verdicts a
/// verified measure.
ArbitrageVerdict check_af(const PricingRule& rule,
                          const AnticoreOptions& options = {});

struct SpreadScan {
  bool pass = true;
  std::optional<SubsetMask> violating_set;
  /// Smallest buy-and-sell sum v(A) + v(A^c) - v(full) over all A.
  double min_buy_sell_sum = 0.0;
};

/// Scans all subsets for v(A) + v(A^c) < v(full) - tol, i.e. an indicator
/// whose quoted spread is negative: buying 1_A and 1_{A^c} and shorting the
/// bond locks in a riskless profit under Choquet pricing.
SpreadScan nonneg_spread_check(const Capacity& v, double tol = kDefaultTol);

struct PortfolioViolation {
  std::vector<Payoff> portfolio;
  double price_sum = 0.0;
};

struct ProbeResult {
  std::size_t trials = 0;
  std::vector<PortfolioViolation> violations;
};

/// Random search for portfolios x_1..x_m (m <= 5) with a nonnegative sum
/// whose prices sum below -1e-9. The last leg is set to y - sum of the
/// others for a random y >= 0, so the payoff-sum constraint holds by
/// construction. Deterministic under seed.
ProbeResult random_portfolio_probe(const PricingRule& rule,
                                   std::size_t trials, std::uint64_t seed);

double portfolio_price_sum(const PricingRule& rule,
                           const std::vector<Payoff>& portfolio);

}  // namespace capric
