#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hrrc/model.hpp"

namespace hrrc {

// Enumeration order is canonical: residents in declaration order, each
// resident's options in preference order followed by "unassigned". The first
// matching emitted is therefore the lexicographically least one under that
// ordering.
struct SearchOptions {
  // A one-time warning goes to std::clog once this many matchings have been
  // emitted. Zero disables it.
  std::size_t warn_after = 1'000'000;
  // Worker threads. The search is split over the first resident's options;
  // results and their order do not depend on this value.
  unsigned jobs = 1;
};

struct EnumerationStats {
  std::size_t emitted = 0;
  bool warned = false;
  bool stopped = false;  // the visitor asked to stop
};

/// Visits every feasible matching exactly once, in canonical order. The
/// visitor returns false to stop early.
EnumerationStats enumerate_feasible(const Instance& instance,
                                    const std::function<bool(const Assignment&)>& visit,
                                    const SearchOptions& options = {});

/// All feasible matchings, in canonical order.
std::vector<Assignment> feasible_matchings(const Instance& instance,
                                           const SearchOptions& options = {});

/// All strongly stable matchings, in canonical order.
std::vector<Assignment> strongly_stable_set(const Instance& instance,
                                            const SearchOptions& options = {});

/// Found with the canonically first strongly stable matching, or NoneExists.
SolveOutcome exists_strongly_stable(const Instance& instance, const SearchOptions& options = {});

}  // namespace hrrc
