#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrrc/model.hpp"

namespace hrrc {

struct Literal {
  int variable = 1;  // 1-based
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

/// Value of variable i at index i - 1.
using SatAssignment = std::vector<bool>;

enum class SatMode {
  Ordinary,   // at least one true literal per clause
  OneInThree  // exactly one true literal per clause
};

/// Reads DIMACS CNF: "c" comment lines, a "p cnf <n> <m>" header, then
/// 0-terminated clauses that may span lines. A line holding only "%" ends
/// the input. Throws ParseError with the line number on malformed input.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& formula);

/// Each message names the offending clause or variable; empty means the
/// formula has the property.
using FormulaReport = std::vector<std::string>;

/// Every clause has two or three literals, no literal repeats inside a
/// clause, and every variable occurs exactly twice positively and once
/// negatively. A variable may appear with both signs in one clause.
FormulaReport check_ppn(const CnfFormula& formula);

/// Every clause has exactly three positive literals over distinct variables.
FormulaReport check_one_in_three_positive(const CnfFormula& formula);

bool satisfies(const CnfFormula& formula, const SatAssignment& assignment,
               SatMode mode = SatMode::Ordinary);

inline constexpr int kDefaultSatBound = 20;

/// The least satisfying assignment, reading x1 as the most significant bit
/// and false before true, or nullopt if none exists. Throws
/// PreconditionError when the formula has more than `max_variables`.
std::optional<SatAssignment> sat_brute(const CnfFormula& formula, SatMode mode = SatMode::Ordinary,
                                       int max_variables = kDefaultSatBound);

/// Where a variable of a normalized formula came from.
struct VariableOrigin {
  int source = 1;        // variable of the input formula
  bool flipped = false;  // stands for the negation of `source`

  bool operator==(const VariableOrigin&) const = default;
};

struct PpnNormalization {
  CnfFormula formula;
  std::vector<VariableOrigin> origins;  // per variable of `formula`, at index i - 1
};

/// Rewrites a formula whose clauses have one to three literals into an
/// equisatisfiable formula passing check_ppn. Every occurrence gets its own
/// fresh variable, the copies of one input variable are tied together by a
/// cycle of implications, and copies whose occurrence was negative are
/// renamed to their negation. A one-literal clause is doubled first.
PpnNormalization to_ppn(const CnfFormula& formula);

/// Maps an assignment of the normalized formula back to the input's
/// variables. Input variables that never occur are set to false.
SatAssignment project_assignment(const PpnNormalization& normalization, int source_variables,
                                 const SatAssignment& assignment);

/// Maps an assignment of the input formula forward to the normalized one.
SatAssignment lift_assignment(const PpnNormalization& normalization, const SatAssignment& assignment);

}  // namespace hrrc
