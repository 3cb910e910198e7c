#pragma once

#include <string>
#include <vector>

#include "hrrc/model.hpp"

namespace hrrc {

// Each solver checks that the instance lies in its class and throws
// PreconditionError naming the violated condition otherwise.

/// Every region has at most one hospital. A hospital in a singleton region
/// gets capacity min(q(h), c(E)) and resident-proposing Gale-Shapley runs on
/// the result.
Assignment solve_regions_size1(const Instance& instance);

/// Every resident lists at most one hospital. Hospitals in declaration order
/// take residents greedily in preference order while they and all their
/// regions have room.
Assignment solve_res_len1(const Instance& instance);

/// Every hospital lists at most one resident. Residents in declaration order
/// take the first hospital on their list that has room in itself and in all
/// its regions.
Assignment solve_hosp_len1(const Instance& instance);

/// Two residents and two hospitals forming a region of size two in which
/// each resident finds both hospitals acceptable.
struct SubInstance2x2 {
  ResidentIndex r1 = 0;
  ResidentIndex r2 = 0;
  HospitalIndex h1 = 0;
  HospitalIndex h2 = 0;
  RegionIndex region = 0;

  bool operator==(const SubInstance2x2&) const = default;
};

/// Regions of size two with exactly two common residents, in region order.
/// Requires disjoint regions.
std::vector<SubInstance2x2> find_2x2_subinstances(const Instance& instance);

/// Disjoint regions of size at most two, lists of length at most two,
/// capacities at most two and no size-two region with two common residents.
/// Runs Gale-Shapley, lowers the capacity of one hospital in the earliest
/// overloaded region, and repeats until every region is within its cap.
Assignment solve_2x2_free(const Instance& instance);

/// Lists of length at most two, regions of size at most two, disjoint.
/// Solves every 2x2 block by brute force and the rest with solve_2x2_free.
SolveOutcome solve_222_disjoint(const Instance& instance);

enum class Algorithm {
  RegionsSize1,
  ResidentListsLen1,
  HospitalListsLen1,
  TwoByTwoFree,
  Disjoint222,
  Exhaustive,
  None,
};

std::string algorithm_name(Algorithm algorithm);

inline constexpr int kDefaultBruteLimit = 12;

/// The solver `dispatch` would use. Exhaustive search is chosen for instances
/// outside the polynomial classes with at most `brute_limit` agents in total.
Algorithm select_algorithm(const Instance& instance, int brute_limit = kDefaultBruteLimit);

/// Routes to the first matching polynomial solver, then to exhaustive search,
/// and otherwise reports Unknown with the reason.
SolveOutcome dispatch(const Instance& instance, int brute_limit = kDefaultBruteLimit);

}  // namespace hrrc
