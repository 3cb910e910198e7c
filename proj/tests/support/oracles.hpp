#pragma once

// Definition-level reference implementations. They share no code with the
// library beyond the data types and are deliberately slow.

#include <vector>

#include "hrrc/model.hpp"

namespace hrrc::testing {

/// Every feasible matching, by trying all combinations of one option per
/// resident. Order is unspecified.
std::vector<Assignment> naive_feasible(const Instance& instance);

bool naive_feasible_matching(const Instance& instance, const Assignment& m);

/// Literal blocking-pair test: acceptable, resident unassigned or prefers h,
/// hospital undersubscribed or prefers r to an assignee.
bool naive_blocks(const Instance& instance, const Assignment& m, Pair p);

/// Blocking and either the move is feasible or h prefers r to an assignee.
bool naive_strongly_blocks(const Instance& instance, const Assignment& m, Pair p);

bool naive_strongly_stable(const Instance& instance, const Assignment& m);

std::vector<Assignment> naive_strongly_stable_set(const Instance& instance);

/// Classical stability, regions ignored.
bool naive_stable(const Instance& instance, const Assignment& m);

/// Hospital-proposing deferred acceptance, regions ignored.
Assignment hospital_proposing(const Instance& instance);

/// All stable matchings of the region-free view, by brute force.
std::vector<Assignment> naive_stable_set(const Instance& instance);

}  // namespace hrrc::testing
