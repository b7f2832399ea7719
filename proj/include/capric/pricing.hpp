#pragma once

#include <string>

#include "capric/capacity.hpp"
#include "capric/payoff.hpp"

namespace capric {

enum class RuleKind { choquet, sipos, linear };

std::string to_string(RuleKind kind);
RuleKind parse_rule_kind(const std::string& text);

/// Choquet integral of x against v, evaluated by the sorted closed form:
/// with values ordered decreasingly x(1) >= ... >= x(n) and S_i the set of
/// the first i states,
///
///   price = sum_{i<n} (x(i) - x(i+1)) v(S_i)  +  x(n) v(full).
///
/// Ties are broken by declared state order (stable sort); the value does not
/// depend on the tie-break because tied terms carry zero coefficient.
/// Equals the two-part level-set integral of v over x.
double choquet_price(const Capacity& v, const Payoff& x);

/// Symmetric integral: choquet(x+) - choquet(x-). Coincides with the Choquet
/// price on nonnegative payoffs and satisfies f(-x) = -f(x) for all x.
double sipos_price(const Capacity& v, const Payoff& x);

/// Expectation against v restricted to singletons. Only meaningful for
/// additive v, where it matches both integrals.
double linear_price(const Capacity& v, const Payoff& x);

/// A pricing functional over one capacity. `linear` requires an additive
/// capacity (input_error otherwise).
class PricingRule {
 public:
  PricingRule(RuleKind kind, Capacity capacity);

  double price(const Payoff& x) const;
  /// Quoted sides when f is read as the ask: ask = f(x), bid = -f(-x).
  double ask(const Payoff& x) const { return price(x); }
  double bid(const Payoff& x) const { return -price(-x); }
  double spread(const Payoff& x) const { return ask(x) - bid(x); }

  RuleKind kind() const { return kind_; }
  const Capacity& capacity() const { return capacity_; }
  const StateSpacePtr& space() const { return capacity_.space(); }

 private:
  RuleKind kind_;
  Capacity capacity_;
};

struct PricingReport {
  std::string payoff_id;
  double ask = 0.0;
  double bid = 0.0;
  double spread = 0.0;       // ask - bid = f(x) + f(-x)
  double sipos_value = 0.0;  // symmetric-integral value, always reported
  double riskless_rate = 0.0;
};

/// Both quoted sides plus the symmetric value and the riskless rate
/// r = 1 / v(full) - 1. When v dominates its conjugate the sandwich
/// bid <= sipos <= ask is asserted within tol (it is an identity, so a
/// violation indicates an internal fault and throws std::logic_error).
PricingReport price_report(const PricingRule& rule, const Payoff& x,
                           std::string payoff_id = "",
                           double tol = kDefaultTol);

double riskless_rate(const Capacity& v);

/// True when the Choquet and symmetric rules for v coincide on every payoff,
/// i.e. when v is auto-conjugate.
bool is_choquet_sipos(const Capacity& v, double tol = kDefaultTol);

}  // namespace capric
