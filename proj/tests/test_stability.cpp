#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hrrc/exhaustive.hpp"
#include "hrrc/stability.hpp"
#include "oracles.hpp"

using namespace hrrc;
using namespace hrrc::testing;

TEST_CASE("region load") {
  const Instance g2 = example_g2();
  CHECK(region_load(g2, pairs_of(g2, {{"r1", "h1"}}), 0) == 1);
  CHECK(region_load(g2, Assignment{}, 0) == 0);
  CHECK(region_load(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}}), 0) == 2);
  CHECK_THROWS_AS(region_load(g2, Assignment{}, 1), Error);
}

TEST_CASE("feasibility") {
  const Instance g2 = example_g2();
  CHECK_FALSE(is_feasible(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}})));
  CHECK(is_feasible(g2, pairs_of(g2, {{"r1", "h1"}})));
  CHECK(is_feasible(g2, Assignment{}));
  // r1 twice is not a matching
  CHECK_THROWS_AS(is_feasible(g2, pairs_of(g2, {{"r1", "h1"}, {"r1", "h2"}})), PreconditionError);
}

TEST_CASE("is_matching") {
  const Instance g2 = example_g2();
  CHECK(is_matching(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}})));
  CHECK_FALSE(is_matching(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h1"}})));  // h1 over capacity
  CHECK_FALSE(is_matching(g2, Assignment({{0, 5}})));
  const Instance lonely = InstanceBuilder().resident("r", {}).hospital("h", 1, {}).build();
  CHECK_FALSE(is_matching(lonely, Assignment({{0, 0}})));  // not acceptable
}

TEST_CASE("blocking pairs") {
  const Instance g2 = example_g2();
  CHECK(blocking_pairs(g2, pairs_of(g2, {{"r1", "h1"}})) ==
        pairs_of(g2, {{"r2", "h1"}, {"r2", "h2"}}).pairs());
  CHECK(blocking_pairs(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}})).empty());
  CHECK(blocking_pairs(g2, Assignment{}).size() == 4);
}

TEST_CASE("strong blocking pairs") {
  const Instance g2 = example_g2();
  SUBCASE("one resident placed") {
    const auto sbps = strong_blocking_pairs(g2, pairs_of(g2, {{"r1", "h1"}}));
    REQUIRE(sbps.size() == 1);
    CHECK(sbps[0].pair == Pair{1, 0});
    CHECK(sbps[0].kind == BlockingKind::StrongBlocking);
    CHECK(sbps[0].preferred_over == std::optional<ResidentIndex>(0));
    CHECK_FALSE(sbps[0].move_feasible);

    const auto all = label_blocking_pairs(g2, pairs_of(g2, {{"r1", "h1"}}));
    REQUIRE(all.size() == 2);
    CHECK(all[1].pair == Pair{1, 1});
    CHECK(all[1].kind == BlockingKind::Blocking);
  }
  SUBCASE("empty matching") {
    const auto sbps = strong_blocking_pairs(g2, Assignment{});
    auto it = std::find_if(sbps.begin(), sbps.end(), [](const auto& w) { return w.pair == Pair{0, 0}; });
    REQUIRE(it != sbps.end());
    CHECK(it->move_feasible);
    CHECK_FALSE(it->preferred_over);
  }
  SUBCASE("cap two") {
    const Instance g = g2_with_cap(2);
    CHECK(strong_blocking_pairs(g, pairs_of(g, {{"r1", "h1"}, {"r2", "h2"}})).empty());
  }
  SUBCASE("infeasible input is rejected") {
    CHECK_THROWS_AS(strong_blocking_pairs(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}})),
                    PreconditionError);
  }
  SUBCASE("both conditions recorded") {
    // h full with r2, prefers r1; moving r1 is feasible too.
    const Instance inst = InstanceBuilder()
                              .resident("r1", {"h"})
                              .resident("r2", {"h"})
                              .hospital("h", 1, {"r1", "r2"})
                              .build();
    const auto sbps = strong_blocking_pairs(inst, pairs_of(inst, {{"r2", "h"}}));
    REQUIRE(sbps.size() == 1);
    CHECK(sbps[0].move_feasible);
    CHECK(sbps[0].preferred_over == std::optional<ResidentIndex>(1));
  }
}

TEST_CASE("strong stability on the fixtures") {
  const Instance g2 = example_g2();
  CHECK_FALSE(is_strongly_stable(g2, pairs_of(g2, {{"r1", "h1"}})));
  CHECK_FALSE(is_strongly_stable(g2, pairs_of(g2, {{"r1", "h1"}, {"r2", "h2"}})));
  const Instance g = g2_with_cap(2);
  CHECK(is_strongly_stable(g, pairs_of(g, {{"r1", "h1"}, {"r2", "h2"}})));
  for (const auto& m : naive_feasible(g2)) CHECK_FALSE(is_strongly_stable(g2, m));
}

TEST_CASE("predicates agree with the definition-level oracle") {
  Rng rng(17);
  GenParams params;
  params.max_residents = 4;
  params.max_hospitals = 4;
  params.gamma = 3;
  params.max_capacity = 2;
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    params.disjoint = i % 2 == 0;
    const Instance inst = random_instance(rng, params);
    for (const auto& m : naive_feasible(inst)) {
      ++checked;
      CHECK(is_feasible(inst, m));
      CHECK(is_strongly_stable(inst, m) == naive_strongly_stable(inst, m));
      const auto bps = blocking_pairs(inst, m);
      const auto sbps = strong_blocking_pairs(inst, m);
      for (const auto& w : sbps) {
        CHECK(std::find(bps.begin(), bps.end(), w.pair) != bps.end());
        CHECK(naive_strongly_blocks(inst, m, w.pair));
        CHECK((w.move_feasible || w.preferred_over.has_value()));
      }
      for (const Pair& p : bps) CHECK(naive_blocks(inst, m, p));
      CHECK(is_strongly_stable(inst, m) == sbps.empty());
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("without regions strong stability is classical stability") {
  Rng rng(23);
  GenParams params;
  params.max_residents = 4;
  params.max_hospitals = 4;
  params.gamma = 0;
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(rng, params);
    for (const auto& m : naive_feasible(inst))
      CHECK(is_strongly_stable(inst, m) == naive_stable(inst, m));
  }
}
