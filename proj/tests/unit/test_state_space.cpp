#include "doctest.h"

#include "capric/errors.hpp"
#include "capric/state_space.hpp"

using namespace capric;

TEST_CASE("masks follow declared state order") {
  const auto space = make_space({"up", "flat", "down"});
  CHECK(space->size() == 3);
  CHECK(space->index_of("flat") == 1);
  CHECK(space->full_mask() == 0b111u);
  CHECK(space->subset_count() == 8);
  CHECK(space->mask_of({"down", "up"}) == 0b101u);
  CHECK(space->complement(0b101u) == 0b010u);

  const auto names = space->names_of(0b101u);
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "up");
  CHECK(names[1] == "down");
}

TEST_CASE("subset keys and labels") {
  const auto space = make_space({"a", "b"});
  CHECK(space->subset_key(0) == "");
  CHECK(space->subset_key(0b11u) == "a,b");
  CHECK(space->subset_label(0) == "{}");
  CHECK(space->subset_label(0b01u) == "{a}");
}

TEST_CASE("invalid state lists are rejected") {
  CHECK_THROWS_AS(make_space({}), input_error);
  CHECK_THROWS_AS(make_space({"a", "a"}), input_error);
  CHECK_THROWS_AS(make_space({""}), input_error);
  CHECK_THROWS_AS(make_space({"a,b"}), input_error);

  std::vector<std::string> too_many;
  for (int i = 0; i < 25; ++i) too_many.push_back("s" + std::to_string(i));
  CHECK_THROWS_AS(make_space(too_many), input_error);
}

TEST_CASE("unknown names are rejected") {
  const auto space = make_space({"a", "b"});
  CHECK_THROWS_AS(space->index_of("c"), input_error);
  CHECK_THROWS_AS(space->mask_of({"a", "c"}), input_error);
}
