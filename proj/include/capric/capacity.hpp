#pragma once

#include <memory>
#include <string>
#include <vector>

#include "capric/state_space.hpp"

namespace capric {

/// Default tolerance for capacity classification and pricing identities.
inline constexpr double kDefaultTol = 1e-9;

/// Monotone set function on the power set of a state space with v(empty) = 0
/// and v(full) > 0. Stored as a dense table of 2^n values indexed by subset
/// mask; values are not required to be normalized to v(full) = 1.
///
/// Pricing reads v(A) as the ask quote of the indicator bet on A, so the
/// conjugate v*(A) = v(full) - v(complement of A) is the bid side.
class Capacity {
 public:
  /// Validating constructor. Collects every violated invariant (grounding,
  /// each non-monotone covering pair, non-positive total mass, size/finite
  /// checks) into one input_error message.
  Capacity(StateSpacePtr space, std::vector<double> table);

  const StateSpacePtr& space() const { return space_; }
  int states() const { return space_->size(); }

  double at(SubsetMask m) const;
  /// v(full): total mass, strictly positive.
  double total() const { return (*table_)[space_->full_mask()]; }
  const std::vector<double>& table() const { return *table_; }

  /// v*(A) = v(full) - v(A^c). Conjugating a conjugate returns the original
  /// table bit-exactly: recomputing v(full) - v*(A^c) in floating point
  /// reintroduces rounding, while the pre-image is the exact answer, so the
  /// pre-image table is kept alongside the transform.
  Capacity conjugate() const;

  /// v(A) + v(A^c) = v(full) for every A, within tol.
  bool is_auto_conjugate(double tol = kDefaultTol) const;

  /// Submodularity: v(A u B) + v(A n B) <= v(A) + v(B) for all pairs, within
  /// tol. Exhaustive over all 4^n subset pairs; throws budget_error above
  /// kMaxConcavityStates states.
  bool is_concave(double tol = kDefaultTol) const;

  /// v(A) + v(A^c) >= v(full) for every A, within tol. Equivalent to
  /// nonnegative bid-ask spreads on every claim.
  bool dominates_conjugate(double tol = kDefaultTol) const;

  /// v(A) equals the sum of its singletons within tol * |A| for every A.
  bool is_additive(double tol = kDefaultTol) const;

  static constexpr int kMaxConcavityStates = 12;

  // Named generators. Weight vectors must be nonnegative with positive sum.
  /// v(A) = sum of weights over A. Total mass is the raw weight sum.
  static Capacity additive(StateSpacePtr space,
                           const std::vector<double>& weights);
  /// v(A) = p(A)^gamma for the probability p obtained by normalizing
  /// weights; gamma > 0. Submodular for gamma <= 1, supermodular above.
  static Capacity distortion(StateSpacePtr space,
                             const std::vector<double>& weights, double gamma);
  /// v(A) = (1 - epsilon) p(A) for proper A and v(full) = 1, with p the
  /// normalized weights and 0 <= epsilon <= 1.
  static Capacity epsilon_contamination(StateSpacePtr space,
                                        const std::vector<double>& weights,
                                        double epsilon);

 private:
  Capacity(StateSpacePtr space, std::shared_ptr<const std::vector<double>> table,
           std::shared_ptr<const std::vector<double>> conjugate_source);

  StateSpacePtr space_;
  std::shared_ptr<const std::vector<double>> table_;
  std::shared_ptr<const std::vector<double>> conjugate_source_;
};

const StateSpacePtr& require_same_space(const Capacity& v,
                                        const class Payoff& x);

}  // namespace capric
