#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hrrc/model.hpp"

namespace hrrc::testing {

inline Assignment pairs_of(const Instance& instance,
                           const std::vector<std::pair<std::string, std::string>>& ids) {
  std::vector<Pair> pairs;
  for (const auto& [r, h] : ids) pairs.push_back({instance.resident_index(r), instance.hospital_index(h)});
  return Assignment(pairs);
}

inline Instance g2_with_cap(int cap) {
  Instance g2 = example_g2();
  g2.regions.front().cap = cap;
  return g2;
}

}  // namespace hrrc::testing
