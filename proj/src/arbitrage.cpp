#include "capric/arbitrage.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "capric/errors.hpp"
#include "capric/simplex.hpp"

namespace capric {

double AdditiveMeasure::of(SubsetMask m) const {
  double sum = 0.0;
  for (int i = 0; i < space->size(); ++i) {
    if (m & state_bit(i)) sum += weights[i];
  }
  return sum;
}

double AdditiveMeasure::total() const { return of(space->full_mask()); }

std::vector<Payoff> ArbitrageCertificate::portfolio() const {
  std::vector<Payoff> out;
  out.reserve(legs.size() + 1);
  const double leg_sign = -bond_coefficient;
  for (const CertificateLeg& leg : legs) {
    out.push_back((leg_sign * leg.coefficient) * indicator(space, leg.subset));
  }
  out.push_back(bond_coefficient * constant(space, 1.0));
  return out;
}

namespace {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static lp::SimplexTolerances<double> tolerances() {
    return lp::default_simplex_tolerances();
  }
  static double band(const AnticoreOptions& options) {
    return options.feasibility_tol;
  }
  static double prune(const AnticoreOptions& options) {
    return options.prune_tol;
  }
  static double to_double(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
  static lp::SimplexTolerances<Rational> tolerances() {
    return lp::exact_simplex_tolerances<Rational>();
  }
  static Rational band(const AnticoreOptions&) { return Rational(0); }
  static Rational prune(const AnticoreOptions&) { return Rational(0); }
  static double to_double(const Rational& v) { return capric::to_double(v); }
};

template <class Scalar>
Scalar abs_of(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : v;
}

void require_lp_budget(const Capacity& v) {
  if (v.states() > kMaxLpStates) {
    throw budget_error("anticore LP supports at most " +
                       std::to_string(kMaxLpStates) + " states, got " +
                       std::to_string(v.states()));
  }
}

std::vector<Rational> rational_table(const Capacity& v,
                                     const AnticoreOptions& options) {
  const std::vector<double>& table = v.table();
  if (options.exact_table) {
    if (options.exact_table->size() != table.size()) {
      throw input_error("exact capacity table has " +
                        std::to_string(options.exact_table->size()) +
                        " entries, expected " + std::to_string(table.size()));
    }
    return *options.exact_table;
  }
  std::vector<Rational> out;
  out.reserve(table.size());
  for (double x : table) out.push_back(dyadic_of(x));
  return out;
}

/// Cover side (packing = false):
///   minimize sum y_A v(A)  s.t.  sum_{A owns w} y_A - s_w = 1,  y,s >= 0.
/// Packing side (packing = true):
///   maximize sum y_A v(A)  s.t.  sum_{A owns w} y_A + s_w = 1,  y,s >= 0,
/// run as minimization of the negated cost. Columns 0..2^n-2 are the masks
/// 1..full in ascending order, then one slack/surplus column per state.
template <class Scalar>
lp::LpResult<Scalar> solve_side(const std::vector<Scalar>& value, int n,
                                bool packing) {
  const SubsetMask full = (n == 0) ? 0 : ((SubsetMask{1} << n) - 1);
  const int cover_cols = static_cast<int>(full);
  lp::DenseSimplex<Scalar> program(n, cover_cols + n);
  for (int row = 0; row < n; ++row) program.rhs(row) = Scalar(1);
  for (SubsetMask mask = 1; mask <= full; ++mask) {
    const int col = static_cast<int>(mask) - 1;
    program.set_cost(col, packing ? Scalar(-value[mask]) : value[mask]);
    for (int row = 0; row < n; ++row) {
      if (mask & state_bit(row)) program.at(row, col) = Scalar(1);
    }
  }
  for (int row = 0; row < n; ++row) {
    program.at(row, cover_cols + row) = packing ? Scalar(1) : Scalar(-1);
  }
  auto result = program.solve(ScalarTraits<Scalar>::tolerances());
  if (result.status != lp::SolveStatus::optimal) {
    throw solver_error("anticore LP did not reach an optimum");
  }
  return result;
}

template <class Scalar>
std::optional<AdditiveMeasure> anticore_scalar(const Capacity& v,
                                               const std::vector<Scalar>& value,
                                               const AnticoreOptions& options) {
  const StateSpacePtr& space = v.space();
  const int n = space->size();
  const SubsetMask full = space->full_mask();
  const Scalar band = ScalarTraits<Scalar>::band(options);
  const Scalar v_full = value[full];

  auto result = solve_side(value, n, /*packing=*/false);
  if (result.objective < v_full - band) return std::nullopt;

  std::vector<Scalar> mu = result.duals;
  for (Scalar& w : mu) {
    if (w < Scalar(0)) {
      if (-w > band) {
        throw solver_error("anticore witness has a negative weight");
      }
      w = Scalar(0);
    }
  }
  for (SubsetMask mask = 1; mask <= full; ++mask) {
    Scalar mass(0);
    for (int i = 0; i < n; ++i) {
      if (mask & state_bit(i)) mass += mu[i];
    }
    if (mask == full) {
      if (abs_of(Scalar(mass - v_full)) > band) {
        throw solver_error("anticore witness misses the total mass");
      }
    } else if (mass > value[mask] + band) {
      throw solver_error("anticore witness exceeds the capacity on " +
                         space->subset_label(mask));
    }
  }

  AdditiveMeasure witness;
  witness.space = space;
  witness.weights.reserve(mu.size());
  for (const Scalar& w : mu) {
    witness.weights.push_back(ScalarTraits<Scalar>::to_double(w));
  }
  return witness;
}

/// Reads the pruned legs out of an optimal cover/packing solution and
/// re-verifies the pointwise side constraint they were solved under. A basic
/// solution has at most n positive columns, so pruning drops at most
/// n * prune_tol of coverage.
template <class Scalar>
ArbitrageCertificate certificate_from_solution(
    const Capacity& v, const std::vector<Scalar>& value,
    const lp::LpResult<Scalar>& result, bool packing,
    const AnticoreOptions& options) {
  const StateSpacePtr& space = v.space();
  const int n = space->size();
  const SubsetMask full = space->full_mask();
  const Scalar band = ScalarTraits<Scalar>::band(options);
  const Scalar prune = ScalarTraits<Scalar>::prune(options);

  ArbitrageCertificate cert;
  cert.space = space;
  cert.bond_coefficient = packing ? 1.0 : -1.0;

  Scalar leg_value(0);
  std::vector<Scalar> coverage(n, Scalar(0));
  for (SubsetMask mask = 1; mask <= full; ++mask) {
    const Scalar& y = result.solution[static_cast<int>(mask) - 1];
    if (y <= prune) continue;
    cert.legs.push_back(
        CertificateLeg{ScalarTraits<Scalar>::to_double(y), mask});
    leg_value += y * value[mask];
    for (int i = 0; i < n; ++i) {
      if (mask & state_bit(i)) coverage[i] += y;
    }
  }

  for (int i = 0; i < n; ++i) {
    const bool ok = packing ? coverage[i] <= Scalar(1) + band
                            : coverage[i] >= Scalar(1) - band;
    if (!ok) {
      throw solver_error("certificate legs do not " +
                         std::string(packing ? "stay under" : "cover") +
                         " the bond at state " + space->state_name(i));
    }
  }

  const Scalar cost =
      packing ? Scalar(value[full] - leg_value) : Scalar(leg_value - value[full]);
  if (!(cost < Scalar(0))) {
    throw solver_error("certificate cost is not negative");
  }
  cert.cost = ScalarTraits<Scalar>::to_double(cost);
  return cert;
}

template <class Scalar>
ArbitrageCertificate cover_certificate_scalar(const Capacity& v,
                                              const std::vector<Scalar>& value,
                                              const AnticoreOptions& options) {
  const int n = v.states();
  const Scalar band = ScalarTraits<Scalar>::band(options);
  const Scalar v_full = value[v.space()->full_mask()];
  auto result = solve_side(value, n, /*packing=*/false);
  if (result.objective >= v_full - band) {
    throw std::logic_error(
        "no arbitrage certificate: the anticore is nonempty");
  }
  return certificate_from_solution(v, value, result, /*packing=*/false,
                                   options);
}

/// Flipped certificate for symmetric rules: a sub-packing of indicators whose
/// combined ask exceeds the bond price. Requires the packing optimum to clear
/// v(full); anything else means the capacity is additive within tolerance and
/// the caller should not have asked.
template <class Scalar>
ArbitrageCertificate packing_certificate_scalar(
    const Capacity& v, const std::vector<Scalar>& value,
    const AnticoreOptions& options) {
  const int n = v.states();
  const Scalar band = ScalarTraits<Scalar>::band(options);
  const Scalar v_full = value[v.space()->full_mask()];
  auto result = solve_side(value, n, /*packing=*/true);
  const Scalar sigma = Scalar(-result.objective);
  if (sigma <= v_full + band) {
    throw solver_error(
        "symmetric-rule arbitrage detected but no certificate clears the "
        "tolerance band");
  }
  return certificate_from_solution(v, value, result, /*packing=*/true,
                                   options);
}

AdditiveMeasure singleton_measure(const Capacity& v) {
  AdditiveMeasure out;
  out.space = v.space();
  out.weights.reserve(v.states());
  for (int i = 0; i < v.states(); ++i) {
    out.weights.push_back(v.at(state_bit(i)));
  }
  return out;
}

}  // namespace

std::optional<AdditiveMeasure> anticore_element(const Capacity& v,
                                                const AnticoreOptions& options) {
  require_lp_budget(v);
  if (options.exact) {
    return anticore_scalar(v, rational_table(v, options), options);
  }
  return anticore_scalar(v, v.table(), options);
}

ArbitrageCertificate extract_certificate(const Capacity& v,
                                         const AnticoreOptions& options) {
  require_lp_budget(v);
  if (options.exact) {
    return cover_certificate_scalar(v, rational_table(v, options), options);
  }
  return cover_certificate_scalar(v, v.table(), options);
}

ArbitrageVerdict check_af(const PricingRule& rule,
                          const AnticoreOptions& options) {
  const Capacity& v = rule.capacity();
  ArbitrageVerdict verdict;

  switch (rule.kind()) {
    case RuleKind::linear: {
      verdict.status = AfStatus::arbitrage_free;
      verdict.witness = singleton_measure(v);
      return verdict;
    }
    case RuleKind::choquet: {
      if (auto witness = anticore_element(v, options)) {
        verdict.status = AfStatus::arbitrage_free;
        verdict.witness = std::move(witness);
      } else {
        verdict.status = AfStatus::arbitrage;
        verdict.certificate = extract_certificate(v, options);
      }
      return verdict;
    }
    case RuleKind::sipos: {
      if (v.is_additive()) {
        verdict.status = AfStatus::arbitrage_free;
        verdict.witness = singleton_measure(v);
        return verdict;
      }
      verdict.status = AfStatus::arbitrage;
      require_lp_budget(v);
      // A symmetric rule over a nonadditive capacity always loses a round
      // trip one way or the other: either no fractional cover of the bond is
      // as expensive as the bond (anticore empty, short the bond against the
      // cover) or some sub-packing of indicators is dearer than the bond
      // (sell the packing, buy the bond). Both cannot be tight, since that
      // squeezes v between an additive minorant and majorant agreeing at
      // full, forcing additivity.
      if (options.exact) {
        const std::vector<Rational> value = rational_table(v, options);
        if (anticore_scalar(v, value, options)) {
          verdict.certificate = packing_certificate_scalar(v, value, options);
        } else {
          verdict.certificate = cover_certificate_scalar(v, value, options);
        }
      } else {
        const std::vector<double>& value = v.table();
        if (anticore_scalar(v, value, options)) {
          verdict.certificate = packing_certificate_scalar(v, value, options);
        } else {
          verdict.certificate = cover_certificate_scalar(v, value, options);
        }
      }
      return verdict;
    }
  }
  throw std::logic_error("unreachable rule kind");
}

SpreadScan nonneg_spread_check(const Capacity& v, double tol) {
  SpreadScan scan;
  const SubsetMask full = v.space()->full_mask();
  const double v_full = v.total();
  bool any = false;
  for (SubsetMask mask = 1; mask < full; ++mask) {
    const double sum = v.at(mask) + v.at(v.space()->complement(mask)) - v_full;
    if (!any || sum < scan.min_buy_sell_sum) {
      scan.min_buy_sell_sum = sum;
      if (sum < -tol) {
        scan.pass = false;
        scan.violating_set = mask;
      }
      any = true;
    }
  }
  return scan;
}

double portfolio_price_sum(const PricingRule& rule,
                           const std::vector<Payoff>& portfolio) {
  double sum = 0.0;
  for (const Payoff& x : portfolio) sum += rule.price(x);
  return sum;
}

ProbeResult random_portfolio_probe(const PricingRule& rule, std::size_t trials,
                                   std::uint64_t seed) {
  ProbeResult result;
  result.trials = trials;
  const StateSpacePtr& space = rule.space();
  const int n = space->size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> leg_count(2, 5);
  std::uniform_real_distribution<double> leg_value(-2.0, 2.0);
  std::uniform_real_distribution<double> slack_value(0.0, 2.0);

  for (std::size_t t = 0; t < trials; ++t) {
    const int m = leg_count(rng);
    std::vector<Payoff> portfolio;
    portfolio.reserve(m);
    std::vector<double> residual(n);
    for (double& r : residual) r = slack_value(rng);
    for (int leg = 0; leg + 1 < m; ++leg) {
      std::vector<double> values(n);
      for (int i = 0; i < n; ++i) {
        values[i] = leg_value(rng);
        residual[i] -= values[i];
      }
      portfolio.emplace_back(space, std::move(values));
    }
    portfolio.emplace_back(space, std::move(residual));

    const double price_sum = portfolio_price_sum(rule, portfolio);
    if (price_sum < -1e-9) {
      result.violations.push_back(
          PortfolioViolation{std::move(portfolio), price_sum});
    }
  }
  return result;
}

}  // namespace capric
