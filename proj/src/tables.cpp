#include "hrrc/detail/tables.hpp"

namespace hrrc::detail {

Tables::Tables(const Instance& instance)
    : resident_rank_(instance.residents.size(),
                     std::vector<int>(instance.hospitals.size(), kNotRanked)),
      hospital_rank_(instance.hospitals.size(),
                     std::vector<int>(instance.residents.size(), kNotRanked)),
      regions_of_(instance.hospitals.size()) {
  for (int r = 0; r < instance.num_residents(); ++r) {
    const auto& prefs = instance.residents[r].prefs;
    for (int i = 0; i < static_cast<int>(prefs.size()); ++i) resident_rank_[r][prefs[i]] = i;
  }
  for (int h = 0; h < instance.num_hospitals(); ++h) {
    const auto& prefs = instance.hospitals[h].prefs;
    for (int i = 0; i < static_cast<int>(prefs.size()); ++i) hospital_rank_[h][prefs[i]] = i;
  }
  for (int e = 0; e < instance.num_regions(); ++e)
    for (int h : instance.regions[e].hospitals) regions_of_[h].push_back(e);
}

MatchingView::MatchingView(const Instance& instance, const Assignment& matching)
    : hospital_of(instance.residents.size(), kUnassigned),
      assignees(instance.hospitals.size()),
      region_load(instance.regions.size(), 0) {
  for (const Pair& p : matching.pairs()) {
    hospital_of[p.resident] = p.hospital;
    assignees[p.hospital].push_back(p.resident);
  }
  for (int e = 0; e < instance.num_regions(); ++e)
    for (int h : instance.regions[e].hospitals)
      region_load[e] += static_cast<int>(assignees[h].size());
}

}  // namespace hrrc::detail
