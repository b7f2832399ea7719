#pragma once

#include <cstddef>
#include <vector>

#include "capric/errors.hpp"

namespace capric::lp {

enum class SolveStatus { optimal, infeasible, unbounded };

template <class Scalar>
struct SimplexTolerances {
  Scalar reduced_cost;  // entering eligibility: reduced cost < -reduced_cost
  Scalar pivot;         // minimum usable pivot magnitude
  Scalar feasibility;   // phase-1 objective at or below this counts as zero
};

inline SimplexTolerances<double> default_simplex_tolerances() {
  return {1e-9, 1e-11, 1e-8};
}

template <class Scalar>
inline SimplexTolerances<Scalar> exact_simplex_tolerances() {
  return {Scalar(0), Scalar(0), Scalar(0)};
}

template <class Scalar>
struct LpResult {
  SolveStatus status = SolveStatus::optimal;
  std::vector<Scalar> solution;  // structural variables only
  Scalar objective = Scalar(0);  // phase-2 value; phase-1 residual if infeasible
  std::vector<Scalar> duals;     // one multiplier per row (c_B B^-1)
  std::size_t pivots = 0;
};

/// Dense two-phase primal simplex for
///
///   minimize c'z   subject to  A z = b,  z >= 0,  b >= 0.
///
/// One artificial variable per row forms the initial basis; phase 1 drives
/// their sum to zero, phase 2 optimizes the real cost with artificials barred
/// from re-entering. Entering column: Bland's rule (smallest eligible index);
/// leaving row: minimum ratio with ties broken by smallest basic index, so
/// the method terminates without cycling. Artificial columns are kept in the
/// tableau: after the final pivot they hold B^-1, which yields the row duals.
///
/// Instantiated with double for production solves and with Rational for the
/// exact mode (all tolerances zero, comparisons exact).
template <class Scalar>
class DenseSimplex {
 public:
  DenseSimplex(int rows, int cols)
      : m_(rows),
        n_(cols),
        width_(cols + rows + 1),
        tab_(static_cast<std::size_t>(rows) * width_, Scalar(0)),
        cost_(cols, Scalar(0)),
        basis_(rows, 0) {
    if (rows <= 0 || cols <= 0) {
      throw input_error("simplex: empty program");
    }
    for (int r = 0; r < m_; ++r) {
      at(r, n_ + r) = Scalar(1);  // artificial identity
      basis_[r] = n_ + r;
    }
  }

  Scalar& at(int r, int c) {
    return tab_[static_cast<std::size_t>(r) * width_ + c];
  }
  const Scalar& at(int r, int c) const {
    return tab_[static_cast<std::size_t>(r) * width_ + c];
  }
  Scalar& rhs(int r) { return at(r, width_ - 1); }
  void set_cost(int c, Scalar v) { cost_[c] = v; }

  LpResult<Scalar> solve(const SimplexTolerances<Scalar>& tol) {
    for (int r = 0; r < m_; ++r) {
      if (rhs(r) < Scalar(0)) {
        throw input_error("simplex: negative right-hand side");
      }
    }
    LpResult<Scalar> result;

    // Phase 1: minimize the sum of artificials.
    std::vector<Scalar> phase1_cost(n_ + m_, Scalar(0));
    for (int r = 0; r < m_; ++r) phase1_cost[n_ + r] = Scalar(1);
    build_obj(phase1_cost);
    if (!iterate(phase1_cost, tol, result.pivots)) {
      // The phase-1 objective is bounded below by zero; an unbounded report
      // here means the tableau is numerically broken.
      throw solver_error("simplex: phase 1 reported unbounded");
    }
    Scalar infeasibility = objective_value(phase1_cost);
    if (infeasibility > tol.feasibility) {
      result.status = SolveStatus::infeasible;
      result.objective = infeasibility;
      result.duals = extract_duals(phase1_cost);
      result.solution.assign(n_, Scalar(0));
      return result;
    }
    drive_out_artificials(tol);

    // Phase 2: minimize the real cost; artificials may not re-enter.
    std::vector<Scalar> phase2_cost(n_ + m_, Scalar(0));
    for (int c = 0; c < n_; ++c) phase2_cost[c] = cost_[c];
    build_obj(phase2_cost);
    if (!iterate(phase2_cost, tol, result.pivots)) {
      result.status = SolveStatus::unbounded;
      return result;
    }

    result.status = SolveStatus::optimal;
    result.solution.assign(n_, Scalar(0));
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) result.solution[basis_[r]] = rhs(r);
    }
    result.objective = objective_value(phase2_cost);
    result.duals = extract_duals(phase2_cost);
    return result;
  }

 private:
  static Scalar abs_of(const Scalar& v) { return v < Scalar(0) ? Scalar(-v) : v; }

  void build_obj(const std::vector<Scalar>& cost) {
    obj_.assign(n_ + m_, Scalar(0));
    for (int c = 0; c < n_ + m_; ++c) obj_[c] = cost[c];
    for (int r = 0; r < m_; ++r) {
      const Scalar cb = cost[basis_[r]];
      if (cb == Scalar(0)) continue;
      for (int c = 0; c < n_ + m_; ++c) obj_[c] -= cb * at(r, c);
    }
  }

  Scalar objective_value(const std::vector<Scalar>& cost) {
    Scalar total(0);
    for (int r = 0; r < m_; ++r) total += cost[basis_[r]] * rhs(r);
    return total;
  }

  std::vector<Scalar> extract_duals(const std::vector<Scalar>& cost) {
    std::vector<Scalar> duals(m_, Scalar(0));
    for (int i = 0; i < m_; ++i) {
      Scalar pi(0);
      for (int r = 0; r < m_; ++r) pi += cost[basis_[r]] * at(r, n_ + i);
      duals[i] = pi;
    }
    return duals;
  }

  // Returns false on unbounded. Artificial columns never enter.
  bool iterate(const std::vector<Scalar>& cost,
               const SimplexTolerances<Scalar>& tol, std::size_t& pivots) {
    (void)cost;
    const std::size_t pivot_guard =
        1000 + 50 * static_cast<std::size_t>(n_ + m_);
    for (;;) {
      int entering = -1;
      for (int c = 0; c < n_; ++c) {  // Bland: smallest structural index
        if (obj_[c] < -tol.reduced_cost) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      Scalar best_ratio(0);
      for (int r = 0; r < m_; ++r) {
        const Scalar& a = at(r, entering);
        if (a > tol.pivot) {
          const Scalar ratio = rhs(r) / a;
          if (leaving < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[r] < basis_[leaving])) {
            leaving = r;
            best_ratio = ratio;
          }
        }
      }
      if (leaving < 0) return false;

      pivot(leaving, entering);
      if (++pivots > pivot_guard) {
        throw solver_error("simplex: pivot guard exceeded");
      }
    }
  }

  void pivot(int r, int c) {
    const Scalar p = at(r, c);
    for (int j = 0; j < width_; ++j) at(r, j) /= p;
    at(r, c) = Scalar(1);
    for (int rr = 0; rr < m_; ++rr) {
      if (rr == r) continue;
      const Scalar factor = at(rr, c);
      if (factor == Scalar(0)) continue;
      for (int j = 0; j < width_; ++j) at(rr, j) -= factor * at(r, j);
      at(rr, c) = Scalar(0);
    }
    const Scalar ofac = obj_[c];
    if (ofac != Scalar(0)) {
      for (int j = 0; j < n_ + m_; ++j) obj_[j] -= ofac * at(r, j);
      obj_[c] = Scalar(0);
    }
    basis_[r] = c;
  }

  void drive_out_artificials(const SimplexTolerances<Scalar>& tol) {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      int col = -1;
      for (int c = 0; c < n_; ++c) {
        if (abs_of(at(r, c)) > tol.pivot) {
          col = c;
          break;
        }
      }
      // A row with no usable structural entry is a redundant constraint; its
      // artificial stays basic at level zero and no later pivot touches it.
      if (col >= 0) pivot(r, col);
    }
  }

  int m_;
  int n_;
  int width_;
  std::vector<Scalar> tab_;
  std::vector<Scalar> cost_;
  std::vector<int> basis_;
  std::vector<Scalar> obj_;
};

}  // namespace capric::lp
