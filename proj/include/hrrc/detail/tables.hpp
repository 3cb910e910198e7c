#pragma once

#include <vector>

#include "hrrc/model.hpp"

namespace hrrc::detail {

// Rank lookups and region membership, built once per call site.
class Tables {
 public:
  explicit Tables(const Instance& instance);

  static constexpr int kNotRanked = 1 << 30;

  // Position of h on r's list (0 = first choice), kNotRanked if absent.
  int resident_rank(ResidentIndex r, HospitalIndex h) const { return resident_rank_[r][h]; }
  int hospital_rank(HospitalIndex h, ResidentIndex r) const { return hospital_rank_[h][r]; }
  bool acceptable(ResidentIndex r, HospitalIndex h) const {
    return resident_rank_[r][h] != kNotRanked;
  }
  const std::vector<RegionIndex>& regions_of(HospitalIndex h) const { return regions_of_[h]; }

 private:
  std::vector<std::vector<int>> resident_rank_;
  std::vector<std::vector<int>> hospital_rank_;
  std::vector<std::vector<RegionIndex>> regions_of_;
};

// Per-agent view of an assignment that is already known to be a matching.
struct MatchingView {
  MatchingView(const Instance& instance, const Assignment& matching);

  std::vector<HospitalIndex> hospital_of;            // kUnassigned if none
  std::vector<std::vector<ResidentIndex>> assignees;  // per hospital
  std::vector<int> region_load;                      // |M(E)|
};

}  // namespace hrrc::detail
