#pragma once

#include <optional>
#include <vector>

#include "hrrc/model.hpp"

namespace hrrc {

enum class BlockingKind { Blocking, StrongBlocking };

/// A blocking pair together with the strong-blocking conditions it meets.
/// Both conditions are recorded when both hold.
struct BlockingWitness {
  Pair pair;
  BlockingKind kind = BlockingKind::Blocking;
  // Moving the resident to the hospital keeps every regional cap.
  bool move_feasible = false;
  // The hospital's least preferred assignee that it ranks below the resident.
  std::optional<ResidentIndex> preferred_over;

  bool operator==(const BlockingWitness&) const = default;
};

/// Acceptable pairs only, each resident at most once, no hospital over capacity.
bool is_matching(const Instance& instance, const Assignment& assignment);

/// |M(E)| for the region with index `region`. Throws Error for an unknown region.
int region_load(const Instance& instance, const Assignment& matching, RegionIndex region);

/// Every regional cap respected. Throws PreconditionError if `matching` is not a matching.
bool is_feasible(const Instance& instance, const Assignment& matching);

/// Blocking pairs in (resident, hospital) declaration order.
std::vector<Pair> blocking_pairs(const Instance& instance, const Assignment& matching);

/// Every blocking pair, labelled with the strong-blocking conditions it meets.
/// Works for infeasible matchings too, which `strong_blocking_pairs` rejects.
std::vector<BlockingWitness> label_blocking_pairs(const Instance& instance,
                                                  const Assignment& matching);

/// The strong blocking pairs of a feasible matching, in declaration order.
/// Throws PreconditionError for non-matchings and infeasible matchings.
std::vector<BlockingWitness> strong_blocking_pairs(const Instance& instance,
                                                   const Assignment& matching);

/// Feasible and free of strong blocking pairs. Throws PreconditionError if
/// `matching` is not a matching.
bool is_strongly_stable(const Instance& instance, const Assignment& matching);

}  // namespace hrrc
