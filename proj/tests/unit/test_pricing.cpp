#include "doctest.h"

#include "capric/errors.hpp"
#include "capric/pricing.hpp"

using namespace capric;

namespace {

const StateSpacePtr kAb = make_space({"a", "b"});
const StateSpacePtr kAbc = make_space({"a", "b", "c"});

Capacity wide_spread() { return Capacity(kAb, {0.0, 0.6, 0.6, 1.0}); }

Capacity symmetric3() {
  return Capacity(kAbc, {0.0, 0.2, 0.2, 0.8, 0.2, 0.8, 0.8, 1.0});
}

}  // namespace

TEST_CASE("worked two-state book") {
  const Capacity v = wide_spread();
  CHECK(choquet_price(v, Payoff(kAb, {1.0, 0.0})) == doctest::Approx(0.6));
  CHECK(choquet_price(v, Payoff(kAb, {-1.0, 0.0})) == doctest::Approx(-0.4));
  CHECK(choquet_price(v, Payoff(kAb, {1.0, -1.0})) == doctest::Approx(0.2));
  CHECK(sipos_price(v, Payoff(kAb, {1.0, -1.0})) == doctest::Approx(0.0));

  const PricingRule rule(RuleKind::choquet, v);
  CHECK(rule.ask(Payoff(kAb, {1.0, 0.0})) == doctest::Approx(0.6));
  CHECK(rule.bid(Payoff(kAb, {1.0, 0.0})) == doctest::Approx(0.4));
  CHECK(rule.spread(Payoff(kAb, {1.0, 0.0})) == doctest::Approx(0.2));
}

TEST_CASE("indicators price at the capacity, constants at k v(full)") {
  const Capacity v = symmetric3();
  for (SubsetMask m = 1; m <= v.space()->full_mask(); ++m) {
    CHECK(choquet_price(v, indicator(kAbc, m)) == v.at(m));
  }
  CHECK(choquet_price(v, constant(kAbc, 2.5)) == doctest::Approx(2.5));
  CHECK(choquet_price(v, constant(kAbc, -2.5)) == doctest::Approx(-2.5));
}

TEST_CASE("positive homogeneity and monotonicity") {
  const Capacity v = symmetric3();
  const Payoff x(kAbc, {2.0, -1.0, 0.5});
  CHECK(choquet_price(v, 3.0 * x) == doctest::Approx(3.0 * choquet_price(v, x)));
  // scaling by -1 swaps to the conjugate, not to -price, unless auto-conjugate;
  // the symmetric rule is odd by construction
  CHECK(sipos_price(v, -x) == doctest::Approx(-sipos_price(v, x)));

  const Payoff y(kAbc, {2.5, -0.5, 0.5});
  CHECK(choquet_price(v, y) >= choquet_price(v, x));
}

TEST_CASE("sipos splits at zero") {
  const Capacity v = wide_spread();
  const Payoff x(kAb, {3.0, -2.0});
  CHECK(sipos_price(v, x) ==
        doctest::Approx(choquet_price(v, pos_part(x)) -
                        choquet_price(v, neg_part(x))));
  // nonnegative payoffs: the two integrals agree
  const Payoff z(kAb, {3.0, 2.0});
  CHECK(sipos_price(v, z) == doctest::Approx(choquet_price(v, z)));
}

TEST_CASE("linear rule demands additivity") {
  const Capacity add = Capacity::additive(kAbc, {0.2, 0.3, 0.5});
  const PricingRule rule(RuleKind::linear, add);
  const Payoff x(kAbc, {1.0, 2.0, 3.0});
  CHECK(rule.price(x) == doctest::Approx(0.2 + 0.6 + 1.5));
  CHECK_THROWS_AS(PricingRule(RuleKind::linear, wide_spread()), input_error);
}

TEST_CASE("riskless rate") {
  CHECK(riskless_rate(wide_spread()) == doctest::Approx(0.0));
  const Capacity cheap(kAb, {0.0, 0.4, 0.4, 0.8});
  CHECK(riskless_rate(cheap) == doctest::Approx(0.25));
}

TEST_CASE("price report carries both sides and the sandwich") {
  const PricingRule rule(RuleKind::choquet, wide_spread());
  const PricingReport report =
      price_report(rule, Payoff(kAb, {1.0, -1.0}), "swap");
  CHECK(report.payoff_id == "swap");
  CHECK(report.ask == doctest::Approx(0.2));
  CHECK(report.bid == doctest::Approx(-0.2));
  CHECK(report.spread == doctest::Approx(0.4));
  CHECK(report.sipos_value == doctest::Approx(0.0));
  CHECK(report.bid <= report.sipos_value + 1e-12);
  CHECK(report.sipos_value <= report.ask + 1e-12);
}

TEST_CASE("choquet and sipos coincide exactly for auto-conjugate capacities") {
  CHECK(is_choquet_sipos(symmetric3()));
  CHECK_FALSE(is_choquet_sipos(wide_spread()));
}

TEST_CASE("rule kind names") {
  CHECK(to_string(RuleKind::sipos) == "sipos");
  CHECK(parse_rule_kind("choquet") == RuleKind::choquet);
  CHECK_THROWS_AS(parse_rule_kind("other"), input_error);
}
