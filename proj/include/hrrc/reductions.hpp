#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrrc/cnf.hpp"
#include "hrrc/model.hpp"

namespace hrrc {

// Builds HRRC instances whose strongly stable matchings correspond to
// satisfying assignments of a formula.
//
//   OneInThree222  positive one-in-three 3-SAT -> class (2,2,2), overlapping regions
//   Ppn223         PPN formula -> class (2,2,3), disjoint regions
//   Ppn232         PPN formula -> class (2,3,2), disjoint regions
//   Ppn322         PPN formula -> class (3,2,2), disjoint regions
//
// PPN: every variable occurs exactly twice positively and once negatively,
// every clause has two or three literals (see check_ppn).
enum class ReductionTarget { OneInThree222, Ppn223, Ppn232, Ppn322 };

std::string target_name(ReductionTarget target);
std::optional<ReductionTarget> parse_target(std::string_view name);

/// The class every instance built for `target` falls in.
InstanceClass advertised_class(ReductionTarget target);

struct OccurrenceSlot {
  int clause = 0;    // 0-based
  int position = 0;  // 0-based literal position in the clause

  bool operator==(const OccurrenceSlot&) const = default;
};

struct ClauseSlot {
  int variable = 1;  // 1-based
  int kind = 1;      // 1, 2: first and second positive occurrence; 3: the negative one

  bool operator==(const ClauseSlot&) const = default;
};

/// Where each variable of a PPN formula occurs, and what each clause
/// position holds. Positive occurrences are ranked by (clause, position).
struct OccurrenceTable {
  std::vector<std::array<OccurrenceSlot, 3>> by_variable;  // index i - 1, slot kind - 1
  std::vector<std::vector<ClauseSlot>> by_clause;

  bool operator==(const OccurrenceTable&) const = default;
};

/// Throws PreconditionError unless the formula passes check_ppn.
OccurrenceTable build_occurrence_table(const CnfFormula& formula);

/// 1-based JSON form of the table, written next to reduced instances.
std::string save_occurrence_table(const OccurrenceTable& table);

struct Reduction {
  ReductionTarget target;
  CnfFormula formula;
  Instance instance;
  std::optional<OccurrenceTable> occurrences;  // set for the PPN targets
};

/// Throws PreconditionError when the formula is outside the target's input class.
Reduction reduce(const CnfFormula& formula, ReductionTarget target);

Reduction reduce_oneinthree(const CnfFormula& formula);
Reduction reduce_ppn(const CnfFormula& formula, ReductionTarget target);

/// Agent and region counts of the instance `reduce` builds.
struct ReductionSize {
  int residents = 0;
  int hospitals = 0;
  int regions = 0;

  bool operator==(const ReductionSize&) const = default;
};

/// Closed-form counts for a PPN formula with n variables, m2 two-literal
/// clauses and m3 three-literal clauses.
ReductionSize ppn_reduction_size(ReductionTarget target, int n, int m2, int m3);

/// The strongly stable matching corresponding to a satisfying assignment.
/// One-in-three semantics apply to OneInThree222. Throws PreconditionError
/// if the assignment does not satisfy the formula.
Assignment encode_assignment(const Reduction& reduction, const SatAssignment& assignment);

/// Reads an assignment off a strongly stable matching of the reduced
/// instance. For other matchings the result need not satisfy the formula.
SatAssignment decode_matching(const Reduction& reduction, const Assignment& matching);

}  // namespace hrrc
