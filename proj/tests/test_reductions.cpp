#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "formulas.hpp"
#include "hrrc/exhaustive.hpp"
#include "hrrc/reductions.hpp"
#include "hrrc/stability.hpp"
#include "oracles.hpp"

using namespace hrrc;
using namespace hrrc::testing;

namespace {

constexpr ReductionTarget kPpnTargets[] = {ReductionTarget::Ppn223, ReductionTarget::Ppn232,
                                           ReductionTarget::Ppn322};

CnfFormula cnf(int n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.num_variables = n;
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) clause.push_back({lit < 0 ? -lit : lit, lit > 0});
    f.clauses.push_back(clause);
  }
  return f;
}

ReductionSize size_of(const Instance& inst) {
  return {static_cast<int>(inst.residents.size()), static_cast<int>(inst.hospitals.size()),
          static_cast<int>(inst.regions.size())};
}

std::pair<int, int> clause_shape(const CnfFormula& f) {
  int m2 = 0, m3 = 0;
  for (const auto& c : f.clauses) ++(c.size() == 2 ? m2 : m3);
  return {m2, m3};
}

// Every assignment, satisfying or not.
std::vector<SatAssignment> all_assignments(int n) {
  std::vector<SatAssignment> out;
  for (int code = 0; code < (1 << n); ++code) {
    SatAssignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (code >> i) & 1;
    out.push_back(a);
  }
  return out;
}

// Compares the reduction with the formula in every direction we can afford.
void check_reduction(const Reduction& red, SatMode mode) {
  const auto sat = sat_brute(red.formula, mode);
  const SolveOutcome outcome = exists_strongly_stable(red.instance);
  CHECK(sat.has_value() == std::holds_alternative<Found>(outcome));
  if (const auto* found = std::get_if<Found>(&outcome))
    CHECK(satisfies(red.formula, decode_matching(red, found->matching), mode));
  for (const SatAssignment& a : all_assignments(red.formula.num_variables)) {
    if (!satisfies(red.formula, a, mode)) continue;
    const Assignment m = encode_assignment(red, a);
    CHECK(is_strongly_stable(red.instance, m));
    CHECK(decode_matching(red, m) == a);
  }
}

}  // namespace

TEST_CASE("target names") {
  for (auto t : {ReductionTarget::OneInThree222, ReductionTarget::Ppn223, ReductionTarget::Ppn232,
                 ReductionTarget::Ppn322})
    CHECK(parse_target(target_name(t)) == t);
  CHECK_FALSE(parse_target("ppn-333").has_value());
}

TEST_CASE("occurrence table") {
  // (x1 v x2), (x1 v -x2), (-x1 v x2)
  const CnfFormula f = cnf(2, {{1, 2}, {1, -2}, {-1, 2}});
  const OccurrenceTable t = build_occurrence_table(f);
  CHECK(t.by_variable[0] == std::array<OccurrenceSlot, 3>{{{0, 0}, {1, 0}, {2, 0}}});
  CHECK(t.by_variable[1] == std::array<OccurrenceSlot, 3>{{{0, 1}, {2, 1}, {1, 1}}});
  CHECK(t.by_clause[2] == std::vector<ClauseSlot>{{1, 3}, {2, 2}});
  const auto json = nlohmann::json::parse(save_occurrence_table(t));
  CHECK(json["variables"][1]["occurrences"][2]["clause"] == 2);
  CHECK(json["variables"][1]["occurrences"][2]["position"] == 2);
  CHECK(json["clauses"][0][1]["variable"] == 2);
  CHECK_THROWS_AS(build_occurrence_table(cnf(2, {{1, 2}, {1, 2}})), PreconditionError);
}

TEST_CASE("inputs outside the class are rejected") {
  CHECK_THROWS_AS(reduce(cnf(2, {{1, 2}}), ReductionTarget::Ppn223), PreconditionError);
  CHECK_THROWS_AS(reduce(cnf(3, {{1, 2, -3}}), ReductionTarget::OneInThree222), PreconditionError);
  CHECK_THROWS_AS(reduce_ppn(cnf(3, {{1, 2, 3}}), ReductionTarget::OneInThree222), PreconditionError);
  const Reduction red = reduce(cnf(2, {{1, 2}, {1, -2}, {-1, 2}}), ReductionTarget::Ppn232);
  CHECK_THROWS_AS(encode_assignment(red, {false, false}), PreconditionError);
}

TEST_CASE("closed-form sizes") {
  CHECK(ppn_reduction_size(ReductionTarget::Ppn223, 3, 0, 3) == ReductionSize{27, 42, 18});
  CHECK(ppn_reduction_size(ReductionTarget::Ppn232, 3, 0, 3) == ReductionSize{27, 33, 15});
  CHECK(ppn_reduction_size(ReductionTarget::Ppn322, 3, 0, 3) == ReductionSize{36, 39, 6});
  CHECK_THROWS_AS(ppn_reduction_size(ReductionTarget::OneInThree222, 3, 0, 1), PreconditionError);

  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 * (1 + trial % 4);
    const int m3 = 2 * std::uniform_int_distribution<int>(0, n / 2)(rng);
    const int m2 = (3 * n - 3 * m3) / 2;
    const CnfFormula f = random_ppn(rng, n, m2, m3);
    for (auto target : kPpnTargets) {
      const Reduction red = reduce(f, target);
      CAPTURE(target_name(target));
      CHECK(size_of(red.instance) == ppn_reduction_size(target, n, m2, m3));
      CHECK(validate(red.instance).empty());
      const InstanceClass c = classify(red.instance);
      const InstanceClass bound = advertised_class(target);
      CHECK(c.disjoint);
      CHECK(c.alpha <= bound.alpha);
      CHECK(c.beta <= bound.beta);
      CHECK(c.gamma <= bound.gamma);
      if (m3 > 0) CHECK(c == bound);
    }
  }
}

TEST_CASE("one-in-three instance shape") {
  const Reduction red = reduce(cnf(3, {{1, 2, 3}}), ReductionTarget::OneInThree222);
  CHECK(size_of(red.instance) == ReductionSize{5, 5, 10});
  CHECK(classify(red.instance) == advertised_class(ReductionTarget::OneInThree222));
  // shared pairs of variables give one region, not two
  const Reduction shared = reduce(cnf(4, {{1, 2, 3}, {1, 2, 4}}), ReductionTarget::OneInThree222);
  CHECK(shared.instance.regions.size() == 19);
}

TEST_CASE("one-in-three reduction agrees with brute force") {
  // all clauses over four variables up to renaming are covered by m = 1 and
  // the four-clause unsatisfiable example
  check_reduction(reduce(cnf(3, {{1, 2, 3}}), ReductionTarget::OneInThree222), SatMode::OneInThree);
  check_reduction(reduce(cnf(3, {{3, 1, 2}}), ReductionTarget::OneInThree222), SatMode::OneInThree);
  check_reduction(reduce(cnf(4, {{1, 2, 3}, {1, 2, 4}}), ReductionTarget::OneInThree222),
                  SatMode::OneInThree);
  const Reduction unsat =
      reduce(cnf(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), ReductionTarget::OneInThree222);
  CHECK(std::holds_alternative<NoneExists>(exists_strongly_stable(unsat.instance)));
}

TEST_CASE("one-in-three encoding keeps unused variables matched") {
  const Reduction red = reduce(cnf(4, {{1, 2, 3}}), ReductionTarget::OneInThree222);
  const Assignment m = encode_assignment(red, {true, false, false, false});
  CHECK(is_strongly_stable(red.instance, m));
  CHECK(decode_matching(red, m) == SatAssignment{true, false, false, true});
}

TEST_CASE("PPN reductions agree with brute force on two variables") {
  const auto formulas = all_ppn_formulas(2);
  REQUIRE_FALSE(formulas.empty());
  for (const auto& f : formulas)
    for (auto target : kPpnTargets) {
      CAPTURE(to_dimacs(f));
      CAPTURE(target_name(target));
      check_reduction(reduce(f, target), SatMode::Ordinary);
    }
}

TEST_CASE("encoded matchings pass the naive checker") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CnfFormula f = random_ppn(rng, 4, 3, 2);
    const auto sat = sat_brute(f);
    if (!sat) continue;
    for (auto target : kPpnTargets) {
      const Reduction red = reduce(f, target);
      const Assignment m = encode_assignment(red, *sat);
      CHECK(naive_strongly_stable(red.instance, m));
    }
  }
}
