#include "hrrc/poly_solvers.hpp"

#include <algorithm>

#include "hrrc/detail/tables.hpp"
#include "hrrc/exhaustive.hpp"
#include "hrrc/hr_core.hpp"
#include "hrrc/stability.hpp"

namespace hrrc {

namespace {

void require(bool condition, const std::string& solver, const std::string& what) {
  if (!condition) throw PreconditionError(solver + ": " + what);
}

// Greedy fill used by the two list-length-one solvers.
class RoomTracker {
 public:
  explicit RoomTracker(const Instance& instance)
      : inst_(instance), tables_(instance), count_(instance.hospitals.size(), 0),
        load_(instance.regions.size(), 0) {}

  bool has_room(HospitalIndex h) const {
    if (count_[h] >= inst_.hospitals[h].capacity) return false;
    for (RegionIndex e : tables_.regions_of(h))
      if (load_[e] >= inst_.regions[e].cap) return false;
    return true;
  }

  void take(HospitalIndex h) {
    ++count_[h];
    for (RegionIndex e : tables_.regions_of(h)) ++load_[e];
  }

 private:
  const Instance& inst_;
  detail::Tables tables_;
  std::vector<int> count_;
  std::vector<int> load_;
};

// Copy of `instance` keeping only the flagged agents and regions. Indices
// are renumbered in declaration order; `resident_back` and `hospital_back`
// map new indices to old ones.
struct Restriction {
  Instance instance;
  std::vector<ResidentIndex> resident_back;
  std::vector<HospitalIndex> hospital_back;
};

Restriction restrict_to(const Instance& instance, const std::vector<bool>& keep_resident,
                        const std::vector<bool>& keep_hospital, const std::vector<bool>& keep_region) {
  Restriction out;
  std::vector<int> resident_new(instance.residents.size(), -1);
  std::vector<int> hospital_new(instance.hospitals.size(), -1);
  for (int r = 0; r < instance.num_residents(); ++r)
    if (keep_resident[r]) {
      resident_new[r] = static_cast<int>(out.resident_back.size());
      out.resident_back.push_back(r);
    }
  for (int h = 0; h < instance.num_hospitals(); ++h)
    if (keep_hospital[h]) {
      hospital_new[h] = static_cast<int>(out.hospital_back.size());
      out.hospital_back.push_back(h);
    }
  for (ResidentIndex r : out.resident_back) {
    Resident res{instance.residents[r].id, {}};
    for (HospitalIndex h : instance.residents[r].prefs)
      if (hospital_new[h] >= 0) res.prefs.push_back(hospital_new[h]);
    out.instance.residents.push_back(std::move(res));
  }
  for (HospitalIndex h : out.hospital_back) {
    Hospital hos{instance.hospitals[h].id, instance.hospitals[h].capacity, {}};
    for (ResidentIndex r : instance.hospitals[h].prefs)
      if (resident_new[r] >= 0) hos.prefs.push_back(resident_new[r]);
    out.instance.hospitals.push_back(std::move(hos));
  }
  for (int e = 0; e < instance.num_regions(); ++e) {
    if (!keep_region[e]) continue;
    Region region{{}, instance.regions[e].cap};
    for (HospitalIndex h : instance.regions[e].hospitals)
      if (hospital_new[h] >= 0) region.hospitals.push_back(hospital_new[h]);
    if (!region.hospitals.empty()) out.instance.regions.push_back(std::move(region));
  }
  return out;
}

void lift_into(const Restriction& restriction, const Assignment& matching, Assignment& target) {
  for (const Pair& p : matching.pairs())
    target.insert({restriction.resident_back[p.resident], restriction.hospital_back[p.hospital]});
}

std::string class_text(const InstanceClass& c) {
  return "(" + std::to_string(c.alpha) + "," + std::to_string(c.beta) + "," +
         std::to_string(c.gamma) + ")";
}

}  // namespace

Assignment solve_regions_size1(const Instance& instance) {
  const InstanceClass c = classify(instance);
  require(c.gamma <= 1, "solve_regions_size1", "every region must contain at most one hospital");
  Instance capped = instance;
  for (const Region& region : instance.regions) {
    Hospital& h = capped.hospitals[region.hospitals.front()];
    h.capacity = std::min(h.capacity, region.cap);
  }
  return rgs(capped, true);
}

Assignment solve_res_len1(const Instance& instance) {
  const InstanceClass c = classify(instance);
  require(c.alpha <= 1, "solve_res_len1", "every resident must list at most one hospital");
  RoomTracker room(instance);
  Assignment out;
  for (HospitalIndex h = 0; h < instance.num_hospitals(); ++h)
    for (ResidentIndex r : instance.hospitals[h].prefs) {
      if (!room.has_room(h)) break;
      room.take(h);
      out.insert({r, h});
    }
  return out;
}

Assignment solve_hosp_len1(const Instance& instance) {
  const InstanceClass c = classify(instance);
  require(c.beta <= 1, "solve_hosp_len1", "every hospital must list at most one resident");
  RoomTracker room(instance);
  Assignment out;
  for (ResidentIndex r = 0; r < instance.num_residents(); ++r)
    for (HospitalIndex h : instance.residents[r].prefs)
      if (room.has_room(h)) {
        room.take(h);
        out.insert({r, h});
        break;
      }
  return out;
}

std::vector<SubInstance2x2> find_2x2_subinstances(const Instance& instance) {
  const InstanceClass c = classify(instance);
  require(c.disjoint, "find_2x2_subinstances", "regions must be pairwise disjoint");
  std::vector<SubInstance2x2> out;
  for (RegionIndex e = 0; e < instance.num_regions(); ++e) {
    auto members = instance.regions[e].hospitals;
    if (members.size() != 2) continue;
    const auto common = common_residents(instance, members);
    if (common.size() != 2) continue;
    std::sort(members.begin(), members.end());
    out.push_back({common[0], common[1], members[0], members[1], e});
  }
  return out;
}

Assignment solve_2x2_free(const Instance& instance) {
  const std::string name = "solve_2x2_free";
  const InstanceClass c = classify(instance);
  require(c.disjoint, name, "regions must be pairwise disjoint");
  require(c.alpha <= 2, name, "every resident must list at most two hospitals");
  require(c.beta <= 2, name, "every hospital must list at most two residents");
  require(c.gamma <= 2, name, "every region must contain at most two hospitals");
  for (const Hospital& h : instance.hospitals)
    require(h.capacity <= 2, name, "hospital " + h.id + " has capacity above two");

  // Per region: the hospital whose capacity drops when the region overloads,
  // preferred first. Fixed by the lists, so computed once.
  struct Fallback {
    std::vector<HospitalIndex> order;
  };
  const detail::Tables tables(instance);
  std::vector<Fallback> fallback(instance.regions.size());
  for (RegionIndex e = 0; e < instance.num_regions(); ++e) {
    const auto& members = instance.regions[e].hospitals;
    if (members.size() == 1) {
      fallback[e].order = members;
      continue;
    }
    const auto common = common_residents(instance, members);
    require(common.size() <= 1, name, "a region of two hospitals has two common residents");
    if (common.size() == 1) {
      const ResidentIndex r = common.front();
      HospitalIndex plus = members[0], minus = members[1];
      if (tables.resident_rank(r, plus) > tables.resident_rank(r, minus)) std::swap(plus, minus);
      fallback[e].order = {minus, plus};
    } else {
      fallback[e].order = members;
      std::sort(fallback[e].order.begin(), fallback[e].order.end());
    }
  }

  Instance work = instance;
  for (;;) {
    const Assignment m = rgs(work, true);
    RegionIndex overloaded = -1;
    for (RegionIndex e = 0; e < work.num_regions() && overloaded < 0; ++e)
      if (region_load(work, m, e) > work.regions[e].cap) overloaded = e;
    if (overloaded < 0) return m;
    // An overloaded region holds at least one resident, so some member has
    // positive capacity.
    for (HospitalIndex h : fallback[overloaded].order)
      if (work.hospitals[h].capacity > 0) {
        --work.hospitals[h].capacity;
        break;
      }
  }
}

SolveOutcome solve_222_disjoint(const Instance& instance) {
  const std::string name = "solve_222_disjoint";
  const InstanceClass c = classify(instance);
  require(c.disjoint, name, "regions must be pairwise disjoint");
  require(c.alpha <= 2 && c.beta <= 2 && c.gamma <= 2, name,
          "class " + class_text(c) + " exceeds (2,2,2)");

  std::vector<bool> keep_resident(instance.residents.size(), true);
  std::vector<bool> keep_hospital(instance.hospitals.size(), true);
  std::vector<bool> keep_region(instance.regions.size(), true);
  Assignment out;

  for (const SubInstance2x2& block : find_2x2_subinstances(instance)) {
    std::vector<bool> block_resident(instance.residents.size(), false);
    std::vector<bool> block_hospital(instance.hospitals.size(), false);
    std::vector<bool> block_region(instance.regions.size(), false);
    block_resident[block.r1] = block_resident[block.r2] = true;
    block_hospital[block.h1] = block_hospital[block.h2] = true;
    block_region[block.region] = true;
    const Restriction sub = restrict_to(instance, block_resident, block_hospital, block_region);
    const SolveOutcome outcome = exists_strongly_stable(sub.instance);
    const auto* found = std::get_if<Found>(&outcome);
    if (!found) return NoneExists{};
    lift_into(sub, found->matching, out);
    keep_resident[block.r1] = keep_resident[block.r2] = false;
    keep_hospital[block.h1] = keep_hospital[block.h2] = false;
    keep_region[block.region] = false;
  }

  const Restriction rest = restrict_to(instance, keep_resident, keep_hospital, keep_region);
  lift_into(rest, solve_2x2_free(shrink(rest.instance)), out);
  return Found{out};
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::RegionsSize1: return "regions-size-1";
    case Algorithm::ResidentListsLen1: return "resident-lists-len-1";
    case Algorithm::HospitalListsLen1: return "hospital-lists-len-1";
    case Algorithm::TwoByTwoFree: return "2x2-free";
    case Algorithm::Disjoint222: return "disjoint-222";
    case Algorithm::Exhaustive: return "exhaustive";
    case Algorithm::None: return "none";
  }
  return "none";
}

Algorithm select_algorithm(const Instance& instance, int brute_limit) {
  const InstanceClass c = classify(instance);
  if (c.gamma <= 1) return Algorithm::RegionsSize1;
  if (c.alpha <= 1) return Algorithm::ResidentListsLen1;
  if (c.beta <= 1) return Algorithm::HospitalListsLen1;
  if (c.disjoint && c.alpha <= 2 && c.beta <= 2 && c.gamma <= 2) return Algorithm::Disjoint222;
  if (instance.num_residents() + instance.num_hospitals() <= brute_limit)
    return Algorithm::Exhaustive;
  return Algorithm::None;
}

SolveOutcome dispatch(const Instance& instance, int brute_limit) {
  switch (select_algorithm(instance, brute_limit)) {
    case Algorithm::RegionsSize1: return Found{solve_regions_size1(instance)};
    case Algorithm::ResidentListsLen1: return Found{solve_res_len1(instance)};
    case Algorithm::HospitalListsLen1: return Found{solve_hosp_len1(instance)};
    case Algorithm::TwoByTwoFree: return Found{solve_2x2_free(instance)};
    case Algorithm::Disjoint222: return solve_222_disjoint(instance);
    case Algorithm::Exhaustive: return exists_strongly_stable(instance);
    case Algorithm::None: break;
  }
  const InstanceClass c = classify(instance);
  const std::string hardness =
      c.disjoint ? "deciding existence is NP-complete for disjoint regions in classes (2,2,3), "
                   "(2,3,2) and (3,2,2)"
                 : "deciding existence is NP-complete already in class (2,2,2) once regions overlap";
  return Unknown{"class " + class_text(c) + (c.disjoint ? " with disjoint regions" : "") +
                 " is outside every polynomial case; " + hardness + "; " +
                 std::to_string(instance.num_residents() + instance.num_hospitals()) +
                 " agents exceed the brute-force limit of " + std::to_string(brute_limit)};
}

}  // namespace hrrc
