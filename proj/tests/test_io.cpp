#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hrrc/io.hpp"

using namespace hrrc;
using namespace hrrc::testing;

TEST_CASE("instance documents round-trip") {
  const Instance g2 = example_g2();
  CHECK(load_instance(save_instance(g2)) == g2);

  Rng rng(5);
  GenParams params;
  params.max_residents = 7;
  params.max_hospitals = 7;
  params.gamma = 3;
  for (int i = 0; i < 100; ++i) {
    params.disjoint = i % 3 != 0;
    const Instance inst = random_instance(rng, params);
    CHECK(load_instance(save_instance(inst)) == inst);
  }
}

TEST_CASE("regions are optional") {
  const Instance inst = load_instance(R"({"residents": [{"id": "r", "prefs": ["h"]}],
                                          "hospitals": [{"id": "h", "capacity": 1, "prefs": ["r"]}]})");
  CHECK(inst.regions.empty());
  CHECK(inst.num_residents() == 1);
}

TEST_CASE("parse errors name the problem") {
  SUBCASE("duplicate hospital id") {
    const char* doc = R"({"residents": [],
      "hospitals": [{"id": "h", "capacity": 1, "prefs": []}, {"id": "h", "capacity": 1, "prefs": []}]})";
    CHECK_THROWS_WITH_AS(load_instance(doc), doctest::Contains("duplicate hospital id"), ParseError);
  }
  SUBCASE("syntax error reports a line") {
    const char* doc = "{\n\"residents\": [\n,]\n}";
    CHECK_THROWS_WITH_AS(load_instance(doc), doctest::Contains("line 3"), ParseError);
  }
  SUBCASE("wrong type reports the field path") {
    const char* doc = R"({"residents": [], "hospitals": [{"id": "h", "capacity": "two", "prefs": []}]})";
    CHECK_THROWS_WITH_AS(load_instance(doc), doctest::Contains("$.hospitals[0].capacity"), ParseError);
  }
  SUBCASE("unknown agent in a list") {
    const char* doc = R"({"residents": [{"id": "r", "prefs": ["ghost"]}], "hospitals": []})";
    CHECK_THROWS_AS(load_instance(doc), ParseError);
  }
  SUBCASE("missing key") {
    CHECK_THROWS_WITH_AS(load_instance(R"({"residents": []})"), doctest::Contains("hospitals"),
                         ParseError);
  }
}

TEST_CASE("invalid but well-formed documents surface validation errors") {
  const char* doc = R"({"residents": [{"id": "r", "prefs": ["h"]}],
                        "hospitals": [{"id": "h", "capacity": 1, "prefs": []}]})";
  CHECK_THROWS_AS(load_instance(doc), PreconditionError);
}

TEST_CASE("duplicate regions merge when equal and fail when caps conflict") {
  const std::string head = R"({"residents": [], "hospitals": [{"id": "a", "capacity": 1, "prefs": []},
                                                               {"id": "b", "capacity": 1, "prefs": []}],)";
  const Instance merged = load_instance(
      head + R"("regions": [{"hospitals": ["a", "b"], "cap": 1}, {"hospitals": ["b", "a"], "cap": 1}]})");
  CHECK(merged.num_regions() == 1);
  CHECK_THROWS_AS(
      load_instance(head + R"("regions": [{"hospitals": ["a", "b"], "cap": 1}, {"hospitals": ["b", "a"], "cap": 2}]})"),
      PreconditionError);
}

TEST_CASE("matching documents") {
  const Instance g2 = example_g2();
  const Assignment m = pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}});
  CHECK(load_matching(g2, save_matching(g2, m)) == m);
  CHECK(load_matching(g2, R"({"pairs": []})").empty());
  CHECK_THROWS_AS(load_matching(g2, R"({"pairs": [["r9", "h1"]]})"), ParseError);
  CHECK_THROWS_AS(load_matching(g2, R"({"pairs": [["r1"]]})"), ParseError);
}
