#include "capric/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "capric/errors.hpp"

namespace capric {

namespace {

std::vector<double> map_values(const Payoff& x, auto&& f) {
  std::vector<double> out(x.values());
  for (double& v : out) v = f(v);
  return out;
}

std::vector<double> zip_values(const Payoff& x, const Payoff& y, auto&& f) {
  require_same_space(x, y);
  std::vector<double> out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = f(x[i], y[i]);
  return out;
}

}  // namespace

Payoff::Payoff(StateSpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw input_error("payoff: null state space");
  if (static_cast<int>(values_.size()) != space_->size()) {
    throw input_error("payoff: " + std::to_string(values_.size()) +
                      " values for " + std::to_string(space_->size()) +
                      " states");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw input_error("payoff: values must be finite");
  }
}

bool Payoff::operator==(const Payoff& other) const {
  return space_->same_as(*other.space_) && values_ == other.values_;
}

const StateSpacePtr& require_same_space(const Payoff& x, const Payoff& y) {
  if (x.space() != y.space() && !x.space()->same_as(*y.space())) {
    throw input_error("payoffs live on different state spaces");
  }
  return x.space();
}

Payoff constant(const StateSpacePtr& space, double k) {
  if (!space) throw input_error("payoff: null state space");
  return Payoff(space, std::vector<double>(space->size(), k));
}

Payoff indicator(const StateSpacePtr& space, SubsetMask subset) {
  if (!space) throw input_error("payoff: null state space");
  if (subset & ~space->full_mask()) {
    throw input_error("indicator: subset mask out of range");
  }
  std::vector<double> values(space->size(), 0.0);
  for (int i = 0; i < space->size(); ++i) {
    if (subset & state_bit(i)) values[i] = 1.0;
  }
  return Payoff(space, std::move(values));
}

Payoff indicator(const StateSpacePtr& space,
                 const std::vector<std::string>& names) {
  if (!space) throw input_error("payoff: null state space");
  return indicator(space, space->mask_of(names));
}

Payoff pos_part(const Payoff& x) {
  return Payoff(x.space(), map_values(x, [](double v) { return std::max(v, 0.0); }));
}

Payoff neg_part(const Payoff& x) {
  return Payoff(x.space(), map_values(x, [](double v) { return std::max(-v, 0.0); }));
}

Payoff call_payoff(const Payoff& x, double strike) {
  if (!(strike >= 0.0)) throw input_error("call: strike must be >= 0");
  return Payoff(x.space(), map_values(x, [strike](double v) {
                  return std::max(v - strike, 0.0);
                }));
}

Payoff put_payoff(const Payoff& x, double strike) {
  if (!(strike >= 0.0)) throw input_error("put: strike must be >= 0");
  return Payoff(x.space(), map_values(x, [strike](double v) {
                  return std::max(strike - v, 0.0);
                }));
}

Payoff discount_certificate(const Payoff& x, double cap) {
  if (!(cap >= 0.0)) throw input_error("discount certificate: cap must be >= 0");
  return Payoff(x.space(),
                map_values(x, [cap](double v) { return std::min(v, cap); }));
}

bool comonotonic(const Payoff& x, const Payoff& y) {
  require_same_space(x, y);
  const int n = x.size();
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if ((x[s] - x[t]) * (y[s] - y[t]) < 0.0) return false;
    }
  }
  return true;
}

Payoff operator+(const Payoff& x, const Payoff& y) {
  return Payoff(x.space(), zip_values(x, y, [](double a, double b) { return a + b; }));
}

Payoff operator-(const Payoff& x, const Payoff& y) {
  return Payoff(x.space(), zip_values(x, y, [](double a, double b) { return a - b; }));
}

Payoff operator-(const Payoff& x) {
  return Payoff(x.space(), map_values(x, [](double v) { return -v; }));
}

Payoff operator*(double a, const Payoff& x) {
  return Payoff(x.space(), map_values(x, [a](double v) { return a * v; }));
}

Payoff cwise_max(const Payoff& x, const Payoff& y) {
  return Payoff(x.space(), zip_values(x, y, [](double a, double b) { return std::max(a, b); }));
}

Payoff cwise_min(const Payoff& x, const Payoff& y) {
  return Payoff(x.space(), zip_values(x, y, [](double a, double b) { return std::min(a, b); }));
}

double max_value(const Payoff& x) {
  return *std::max_element(x.values().begin(), x.values().end());
}

double min_value(const Payoff& x) {
  return *std::min_element(x.values().begin(), x.values().end());
}

double sup_distance(const Payoff& x, const Payoff& y) {
  require_same_space(x, y);
  double d = 0.0;
  for (int i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace capric
