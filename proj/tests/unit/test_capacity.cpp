#include "doctest.h"

#include <string>
#include <vector>

#include "capric/capacity.hpp"
#include "capric/errors.hpp"

using namespace capric;

namespace {

const StateSpacePtr kAb = make_space({"a", "b"});
const StateSpacePtr kAbc = make_space({"a", "b", "c"});

Capacity wide_spread() { return Capacity(kAb, {0.0, 0.6, 0.6, 1.0}); }

Capacity symmetric3() {
  return Capacity(kAbc, {0.0, 0.2, 0.2, 0.8, 0.2, 0.8, 0.8, 1.0});
}

}  // namespace

TEST_CASE("validation collects every violation in one message") {
  // not grounded plus two non-monotone covering pairs: all three complaints
  // should appear at once
  try {
    Capacity bad(kAb, {0.1, 0.5, 0.4, 0.3});
    FAIL("expected input_error");
  } catch (const input_error& e) {
    const std::string what = e.what();
    CHECK(what.find("v({}) = 0.1") != std::string::npos);
    CHECK(what.find("{a}") != std::string::npos);
    CHECK(what.find("{b}") != std::string::npos);
  }
  CHECK_THROWS_AS(Capacity(kAb, {0.0, 0.0, 0.0, 0.0}), input_error);
  CHECK_THROWS_AS(Capacity(kAb, {0.0, 0.5, 0.5}), input_error);
}

TEST_CASE("conjugation is a bit-exact involution") {
  const Capacity v = wide_spread();
  const Capacity conj = v.conjugate();
  CHECK(conj.at(0b01u) == doctest::Approx(0.4));
  CHECK(conj.at(0b10u) == doctest::Approx(0.4));
  CHECK(conj.total() == 1.0);
  CHECK(conj.conjugate().table() == v.table());

  // 0.1 does not round-trip through 1 - (1 - 0.1) in floating point, so the
  // involution must come from the cached pre-image, not recomputation
  const Capacity w(kAb, {0.0, 0.1, 0.1, 1.0});
  CHECK(1.0 - (1.0 - 0.1) != 0.1);
  CHECK(w.conjugate().conjugate().table() == w.table());
}

TEST_CASE("auto-conjugacy") {
  CHECK(symmetric3().is_auto_conjugate());
  CHECK_FALSE(wide_spread().is_auto_conjugate());
  const Capacity additive = Capacity::additive(kAbc, {0.2, 0.3, 0.5});
  CHECK(additive.is_auto_conjugate());
}

TEST_CASE("concavity is exhaustive submodularity") {
  CHECK(Capacity::distortion(kAbc, {1.0, 1.0, 2.0}, 0.5).is_concave());
  CHECK(Capacity::distortion(kAbc, {1.0, 1.0, 2.0}, 1.0).is_concave());
  CHECK_FALSE(Capacity::distortion(kAbc, {1.0, 1.0, 2.0}, 2.0).is_concave());
  CHECK(Capacity::additive(kAbc, {0.2, 0.3, 0.5}).is_concave());
  CHECK_FALSE(symmetric3().is_concave());
}

TEST_CASE("concavity budget") {
  std::vector<std::string> names;
  std::vector<double> weights;
  for (int i = 0; i < 13; ++i) {
    names.push_back("s" + std::to_string(i));
    weights.push_back(1.0);
  }
  const Capacity big = Capacity::additive(make_space(names), weights);
  CHECK_THROWS_AS(big.is_concave(), budget_error);
}

TEST_CASE("dominance over the conjugate") {
  CHECK(wide_spread().dominates_conjugate());
  CHECK(symmetric3().dominates_conjugate());
  CHECK_FALSE(Capacity(kAb, {0.0, 0.3, 0.3, 1.0}).dominates_conjugate());
}

TEST_CASE("additivity") {
  CHECK(Capacity::additive(kAbc, {0.2, 0.3, 0.5}).is_additive());
  CHECK_FALSE(wide_spread().is_additive());
  CHECK_FALSE(symmetric3().is_additive());
}

TEST_CASE("generators") {
  const Capacity dist = Capacity::distortion(kAb, {1.0, 3.0}, 0.5);
  CHECK(dist.at(0b01u) == doctest::Approx(0.5));        // (1/4)^0.5
  CHECK(dist.at(0b10u) == doctest::Approx(0.8660254));  // (3/4)^0.5
  CHECK(dist.total() == doctest::Approx(1.0));

  const Capacity eps = Capacity::epsilon_contamination(kAbc, {1.0, 1.0, 2.0}, 0.2);
  CHECK(eps.at(0b001u) == doctest::Approx(0.8 * 0.25));
  CHECK(eps.at(0b011u) == doctest::Approx(0.8 * 0.5));
  CHECK(eps.total() == 1.0);
  CHECK_FALSE(eps.dominates_conjugate());

  CHECK_THROWS_AS(Capacity::additive(kAb, {-1.0, 2.0}), input_error);
  CHECK_THROWS_AS(Capacity::additive(kAb, {0.0, 0.0}), input_error);
  CHECK_THROWS_AS(Capacity::distortion(kAb, {1.0, 1.0}, 0.0), input_error);
  CHECK_THROWS_AS(Capacity::epsilon_contamination(kAb, {1.0, 1.0}, 1.5),
                  input_error);
}
