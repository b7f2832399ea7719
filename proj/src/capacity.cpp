#include "capric/capacity.hpp"

#include <bit>
#include <cmath>
#include <utility>

#include "capric/errors.hpp"
#include "capric/payoff.hpp"

namespace capric {

namespace {

std::vector<std::string> table_violations(const StateSpace& space,
                                          const std::vector<double>& table) {
  std::vector<std::string> bad;
  const std::size_t want = space.subset_count();
  if (table.size() != want) {
    bad.push_back("table has " + std::to_string(table.size()) +
                  " entries, expected " + std::to_string(want));
    return bad;  // nothing below is meaningful on a wrong-sized table
  }
  for (std::size_t m = 0; m < want; ++m) {
    if (!std::isfinite(table[m])) {
      bad.push_back("value at " + space.subset_label(SubsetMask(m)) +
                    " is not finite");
    }
  }
  if (!bad.empty()) return bad;

  if (table[0] != 0.0) {
    bad.push_back("not grounded: v({}) = " + std::to_string(table[0]) +
                  ", must be 0");
  }
  const SubsetMask full = space.full_mask();
  if (!(table[full] > 0.0)) {
    bad.push_back("total mass v(" + space.subset_label(full) +
                  ") = " + std::to_string(table[full]) + ", must be > 0");
  }
  // Monotonicity over covering pairs implies it over all inclusions.
  for (SubsetMask m = 0; m < full; ++m) {
    for (int i = 0; i < space.size(); ++i) {
      const SubsetMask bit = state_bit(i);
      if (m & bit) continue;
      if (table[m] > table[m | bit]) {
        bad.push_back("not monotone: v(" + space.subset_label(m) + ") > v(" +
                      space.subset_label(m | bit) + ")");
      }
    }
  }
  return bad;
}

std::string check_weights(const std::vector<double>& weights, int n) {
  if (static_cast<int>(weights.size()) != n) {
    return "expected " + std::to_string(n) + " weights, got " +
           std::to_string(weights.size());
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) return "weights must be finite and >= 0";
    sum += w;
  }
  if (!(sum > 0.0)) return "weights must have a positive sum";
  return {};
}

}  // namespace

Capacity::Capacity(StateSpacePtr space, std::vector<double> table)
    : space_(std::move(space)) {
  if (!space_) throw input_error("capacity: null state space");
  auto bad = table_violations(*space_, table);
  if (!bad.empty()) {
    std::string msg = "invalid capacity:";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw input_error(msg);
  }
  table_ = std::make_shared<const std::vector<double>>(std::move(table));
}

Capacity::Capacity(StateSpacePtr space,
                   std::shared_ptr<const std::vector<double>> table,
                   std::shared_ptr<const std::vector<double>> conjugate_source)
    : space_(std::move(space)),
      table_(std::move(table)),
      conjugate_source_(std::move(conjugate_source)) {}

double Capacity::at(SubsetMask m) const {
  if (m >= table_->size()) {
    throw input_error("capacity: subset mask out of range");
  }
  return (*table_)[m];
}

Capacity Capacity::conjugate() const {
  if (conjugate_source_) {
    return Capacity(space_, conjugate_source_, table_);
  }
  const SubsetMask full = space_->full_mask();
  const double vfull = total();
  std::vector<double> out(table_->size(), 0.0);
  for (SubsetMask m = 0; m <= full; ++m) {
    out[m] = vfull - (*table_)[full & ~m];
  }
  out[0] = 0.0;  // vfull - vfull, forced exact
  return Capacity(space_,
                  std::make_shared<const std::vector<double>>(std::move(out)),
                  table_);
}

bool Capacity::is_auto_conjugate(double tol) const {
  const SubsetMask full = space_->full_mask();
  const double vfull = total();
  for (SubsetMask m = 0; m <= full; ++m) {
    if (std::abs((*table_)[m] + (*table_)[full & ~m] - vfull) > tol) {
      return false;
    }
  }
  return true;
}

bool Capacity::is_concave(double tol) const {
  if (states() > kMaxConcavityStates) {
    throw budget_error(
        "concavity check enumerates all subset pairs; capped at " +
        std::to_string(kMaxConcavityStates) + " states");
  }
  const SubsetMask full = space_->full_mask();
  const auto& t = *table_;
  for (SubsetMask a = 0; a <= full; ++a) {
    for (SubsetMask b = a + 1; b <= full; ++b) {
      if (t[a | b] + t[a & b] > t[a] + t[b] + tol) return false;
    }
  }
  return true;
}

bool Capacity::dominates_conjugate(double tol) const {
  const SubsetMask full = space_->full_mask();
  const double vfull = total();
  for (SubsetMask m = 0; m <= full; ++m) {
    if ((*table_)[m] + (*table_)[full & ~m] < vfull - tol) return false;
  }
  return true;
}

bool Capacity::is_additive(double tol) const {
  const SubsetMask full = space_->full_mask();
  const auto& t = *table_;
  for (SubsetMask m = 1; m <= full; ++m) {
    double singletons = 0.0;
    for (int i = 0; i < states(); ++i) {
      if (m & state_bit(i)) singletons += t[state_bit(i)];
    }
    if (std::abs(t[m] - singletons) > tol * std::popcount(m)) return false;
  }
  return true;
}

Capacity Capacity::additive(StateSpacePtr space,
                            const std::vector<double>& weights) {
  if (!space) throw input_error("capacity: null state space");
  if (auto err = check_weights(weights, space->size()); !err.empty()) {
    throw input_error("additive generator: " + err);
  }
  std::vector<double> table(space->subset_count(), 0.0);
  for (SubsetMask m = 1; m <= space->full_mask(); ++m) {
    double sum = 0.0;
    for (int i = 0; i < space->size(); ++i) {
      if (m & state_bit(i)) sum += weights[i];
    }
    table[m] = sum;
  }
  return Capacity(std::move(space), std::move(table));
}

Capacity Capacity::distortion(StateSpacePtr space,
                              const std::vector<double>& weights,
                              double gamma) {
  if (!space) throw input_error("capacity: null state space");
  if (auto err = check_weights(weights, space->size()); !err.empty()) {
    throw input_error("distortion generator: " + err);
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw input_error("distortion generator: gamma must be > 0");
  }
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  std::vector<double> table(space->subset_count(), 0.0);
  const SubsetMask full = space->full_mask();
  for (SubsetMask m = 1; m <= full; ++m) {
    double p = 0.0;
    for (int i = 0; i < space->size(); ++i) {
      if (m & state_bit(i)) p += weights[i];
    }
    table[m] = std::pow(p / wsum, gamma);
  }
  table[full] = 1.0;  // pow(1, gamma) with the normalization rounded away
  return Capacity(std::move(space), std::move(table));
}

Capacity Capacity::epsilon_contamination(StateSpacePtr space,
                                         const std::vector<double>& weights,
                                         double epsilon) {
  if (!space) throw input_error("capacity: null state space");
  if (auto err = check_weights(weights, space->size()); !err.empty()) {
    throw input_error("epsilon contamination generator: " + err);
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw input_error(
        "epsilon contamination generator: epsilon must be in [0, 1]");
  }
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  std::vector<double> table(space->subset_count(), 0.0);
  const SubsetMask full = space->full_mask();
  for (SubsetMask m = 1; m < full; ++m) {
    double p = 0.0;
    for (int i = 0; i < space->size(); ++i) {
      if (m & state_bit(i)) p += weights[i];
    }
    table[m] = (1.0 - epsilon) * (p / wsum);
  }
  table[full] = 1.0;
  return Capacity(std::move(space), std::move(table));
}

const StateSpacePtr& require_same_space(const Capacity& v, const Payoff& x) {
  if (v.space() != x.space() && !v.space()->same_as(*x.space())) {
    throw input_error("capacity and payoff live on different state spaces");
  }
  return v.space();
}

}  // namespace capric
