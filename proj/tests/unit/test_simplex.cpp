#include "doctest.h"

#include "capric/exact.hpp"
#include "capric/simplex.hpp"

using namespace capric;
using lp::DenseSimplex;
using lp::SolveStatus;

TEST_CASE("small lp reaches the known optimum with correct duals") {
  // min -x1 - 2 x2  s.t.  x1 + x2 + s1 = 4,  x1 + 3 x2 + s2 = 6
  DenseSimplex<double> lp(2, 4);
  lp.at(0, 0) = 1.0; lp.at(0, 1) = 1.0; lp.at(0, 2) = 1.0; lp.rhs(0) = 4.0;
  lp.at(1, 0) = 1.0; lp.at(1, 1) = 3.0; lp.at(1, 3) = 1.0; lp.rhs(1) = 6.0;
  lp.set_cost(0, -1.0);
  lp.set_cost(1, -2.0);

  const auto result = lp.solve(lp::default_simplex_tolerances());
  REQUIRE(result.status == SolveStatus::optimal);
  CHECK(result.objective == doctest::Approx(-5.0));
  CHECK(result.solution[0] == doctest::Approx(3.0));
  CHECK(result.solution[1] == doctest::Approx(1.0));
  REQUIRE(result.duals.size() == 2);
  CHECK(result.duals[0] == doctest::Approx(-0.5));
  CHECK(result.duals[1] == doctest::Approx(-0.5));
}

TEST_CASE("conflicting equalities are reported infeasible") {
  DenseSimplex<double> lp(2, 2);
  lp.at(0, 0) = 1.0; lp.at(0, 1) = 1.0; lp.rhs(0) = 2.0;
  lp.at(1, 0) = 1.0; lp.at(1, 1) = 1.0; lp.rhs(1) = 4.0;

  const auto result = lp.solve(lp::default_simplex_tolerances());
  CHECK(result.status == SolveStatus::infeasible);
  CHECK(result.objective == doctest::Approx(2.0));  // leftover artificial mass
}

TEST_CASE("unbounded rays are detected") {
  // min -x1  s.t.  x1 - x2 = 0
  DenseSimplex<double> lp(1, 2);
  lp.at(0, 0) = 1.0; lp.at(0, 1) = -1.0; lp.rhs(0) = 0.0;
  lp.set_cost(0, -1.0);

  const auto result = lp.solve(lp::default_simplex_tolerances());
  CHECK(result.status == SolveStatus::unbounded);
}

TEST_CASE("redundant rows are tolerated") {
  DenseSimplex<double> lp(2, 2);
  lp.at(0, 0) = 1.0; lp.at(0, 1) = 1.0; lp.rhs(0) = 2.0;
  lp.at(1, 0) = 2.0; lp.at(1, 1) = 2.0; lp.rhs(1) = 4.0;
  lp.set_cost(0, 1.0);

  const auto result = lp.solve(lp::default_simplex_tolerances());
  REQUIRE(result.status == SolveStatus::optimal);
  CHECK(result.objective == doctest::Approx(0.0));
  CHECK(result.solution[1] == doctest::Approx(2.0));
}

TEST_CASE("negative right-hand sides are rejected") {
  DenseSimplex<double> lp(1, 1);
  lp.at(0, 0) = 1.0;
  lp.rhs(0) = -1.0;
  CHECK_THROWS_AS(lp.solve(lp::default_simplex_tolerances()), input_error);
}

TEST_CASE("rational instantiation is exact") {
  DenseSimplex<Rational> lp(1, 2);
  lp.at(0, 0) = Rational(1); lp.at(0, 1) = Rational(1);
  lp.rhs(0) = Rational(1) / 3;
  lp.set_cost(0, Rational(-1));

  const auto result = lp.solve(lp::exact_simplex_tolerances<Rational>());
  REQUIRE(result.status == SolveStatus::optimal);
  CHECK(result.objective == Rational(-1) / 3);
  CHECK(result.solution[0] == Rational(1) / 3);
  CHECK(result.duals[0] == Rational(-1));
}
