#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "capric/arbitrage.hpp"
#include "capric/parity.hpp"

// Brute-force reference implementations for the test surface only. None of
// this shares evaluation code with the library: the integral is computed by
// level-set quadrature, parities by grid enumeration, anticore membership by
// the balanced-collection inequalities.
namespace capric::oracle {

/// Two-part level-set integral of x against v:
///
///   integral_{-inf}^0 (v({x >= t}) - v(full)) dt + integral_0^inf v({x >= t}) dt
///
/// evaluated as a midpoint quadrature over [min(x) ^ 0, max(x) v 0] with
/// cells of width <= step. Every payoff value and 0 is inserted as a cell
/// edge; the integrand is constant between those breakpoints (the level set
/// {x >= t} only changes when t crosses a payoff value), so once they are
/// separated the sum is exact and further step refinement cannot move it.
double choquet_riemann(const Capacity& v, const Payoff& x, double step);

struct GridFailure {
  Payoff x;
  double strike;
  double residual;
};

/// Exhaustive parity check over all payoffs with entries in {-2,-1,0,1,2}
/// and strikes {0,1,2}; 5^n * 3 checks. budget_error above 3 states.
std::vector<GridFailure> exhaustive_parity(const PricingRule& rule,
                                           ParityKind kind, double tol = 1e-9);

/// Anticore nonemptiness for n <= 3, decided by the balanced-collection
/// inequalities of the conjugate game written directly in terms of v:
///   n = 2:  v(a) + v(b) >= v(full)
///   n = 3:  v(i) + v(jk) >= v(full) for the three splits,
///           sum of pair values >= 2 v(full),
///           sum of singleton values >= v(full).
/// budget_error above 3 states.
bool anticore_nonempty_small(const Capacity& v, double tol = 1e-12);

/// Uniform random table with an ascending monotone fix-up; v(full) = 1.
Capacity random_capacity(const StateSpacePtr& space, std::mt19937_64& rng);

/// Neo-additive v(A) = alpha + (1 - 2 alpha) p(A) on proper nonempty A.
/// Auto-conjugate by construction; nonadditive whenever n >= 3.
Capacity random_neo_additive(const StateSpacePtr& space, std::mt19937_64& rng);

/// v = w v w* for a random w; dominates its conjugate by construction.
Capacity random_dominating(const StateSpacePtr& space, std::mt19937_64& rng);

Payoff random_payoff(const StateSpacePtr& space, std::mt19937_64& rng,
                     double lo = -10.0, double hi = 10.0);

/// Two payoffs nondecreasing along one shared random state order.
std::pair<Payoff, Payoff> random_comonotonic_pair(const StateSpacePtr& space,
                                                  std::mt19937_64& rng);

/// States named s1..sn.
StateSpacePtr small_space(int n);

}  // namespace capric::oracle
