#pragma once

#include <vector>

#include "generators.hpp"
#include "hrrc/cnf.hpp"

namespace hrrc::testing {

/// Every PPN formula over n variables up to clause and literal order: each
/// way of splitting the 2n positive and n negative literals into clauses of
/// two or three, kept only if it passes check_ppn.
std::vector<CnfFormula> all_ppn_formulas(int n);

/// Random formula with clauses of 1..max_len literals over distinct variables.
CnfFormula random_cnf(Rng& rng, int n, int m, int max_len);

/// Random PPN formula with m2 two-literal and m3 three-literal clauses, by
/// rejection sampling. Requires 2*m2 + 3*m3 == 3*n.
CnfFormula random_ppn(Rng& rng, int n, int m2, int m3);

}  // namespace hrrc::testing
