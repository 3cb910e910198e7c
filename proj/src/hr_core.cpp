#include "hrrc/hr_core.hpp"

#include <algorithm>
#include <set>

#include "hrrc/detail/tables.hpp"

namespace hrrc {

Assignment rgs(const Instance& instance, bool ignore_regions) {
  if (!ignore_regions && !instance.regions.empty())
    throw PreconditionError("rgs runs on plain HR instances; pass ignore_regions to drop the caps");
  const detail::Tables tables(instance);
  const int nr = instance.num_residents();

  // Assignees ordered by hospital rank, worst at the back of the set.
  auto by_rank = [&](HospitalIndex h) {
    return [&tables, h](ResidentIndex a, ResidentIndex b) {
      return tables.hospital_rank(h, a) < tables.hospital_rank(h, b);
    };
  };
  using Held = std::vector<ResidentIndex>;
  std::vector<Held> held(instance.hospitals.size());
  std::vector<std::size_t> next_choice(nr, 0);
  std::vector<HospitalIndex> hospital_of(nr, kUnassigned);

  for (ResidentIndex start = 0; start < nr; ++start) {
    ResidentIndex r = start;
    // Propose until r is held or runs out; a displaced resident picks up at once.
    while (r != kUnassigned) {
      const auto& prefs = instance.residents[r].prefs;
      if (next_choice[r] >= prefs.size()) break;
      const HospitalIndex h = prefs[next_choice[r]++];
      const int capacity = instance.hospitals[h].capacity;
      if (capacity == 0) continue;
      Held& current = held[h];
      if (static_cast<int>(current.size()) < capacity) {
        current.insert(std::upper_bound(current.begin(), current.end(), r, by_rank(h)), r);
        hospital_of[r] = h;
        r = kUnassigned;
        continue;
      }
      const ResidentIndex worst = current.back();
      if (tables.hospital_rank(h, r) < tables.hospital_rank(h, worst)) {
        current.pop_back();
        current.insert(std::upper_bound(current.begin(), current.end(), r, by_rank(h)), r);
        hospital_of[r] = h;
        hospital_of[worst] = kUnassigned;
        r = worst;
      }
    }
  }

  std::vector<Pair> pairs;
  for (ResidentIndex r = 0; r < nr; ++r)
    if (hospital_of[r] != kUnassigned) pairs.push_back({r, hospital_of[r]});
  return Assignment(std::move(pairs));
}

Instance shrink(const Instance& instance) {
  Instance out = instance;
  for (auto& h : out.hospitals)
    h.capacity = std::min(h.capacity, static_cast<int>(h.prefs.size()));
  return out;
}

}  // namespace hrrc
