#pragma once

#include <vector>

#include "capric/state_space.hpp"

namespace capric {

/// State-contingent claim: one finite value per state of its space.
class Payoff {
 public:
  Payoff(StateSpacePtr space, std::vector<double> values);

  const StateSpacePtr& space() const { return space_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const Payoff& other) const;

 private:
  StateSpacePtr space_;
  std::vector<double> values_;
};

Payoff constant(const StateSpacePtr& space, double k);
Payoff indicator(const StateSpacePtr& space, SubsetMask subset);
Payoff indicator(const StateSpacePtr& space,
                 const std::vector<std::string>& names);

Payoff pos_part(const Payoff& x);  // x+ = x v 0
Payoff neg_part(const Payoff& x);  // x- = (-x) v 0, so x = x+ - x-

/// (x - k1)+ for strike k >= 0.
Payoff call_payoff(const Payoff& x, double strike);
/// (k1 - x)+ for strike k >= 0.
Payoff put_payoff(const Payoff& x, double strike);
/// x ^ k1 for cap k >= 0: pays the underlying up to k, then k.
Payoff discount_certificate(const Payoff& x, double cap);

/// True when (x(s) - x(t)) * (y(s) - y(t)) >= 0 for every pair of states.
bool comonotonic(const Payoff& x, const Payoff& y);

Payoff operator+(const Payoff& x, const Payoff& y);
Payoff operator-(const Payoff& x, const Payoff& y);
Payoff operator-(const Payoff& x);
Payoff operator*(double a, const Payoff& x);

Payoff cwise_max(const Payoff& x, const Payoff& y);
Payoff cwise_min(const Payoff& x, const Payoff& y);

double max_value(const Payoff& x);
double min_value(const Payoff& x);
double sup_distance(const Payoff& x, const Payoff& y);

const StateSpacePtr& require_same_space(const Payoff& x, const Payoff& y);

}  // namespace capric
