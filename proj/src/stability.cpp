#include "hrrc/stability.hpp"

#include "hrrc/detail/tables.hpp"

namespace hrrc {

using detail::MatchingView;
using detail::Tables;

bool is_matching(const Instance& instance, const Assignment& assignment) {
  const Tables tables(instance);
  std::vector<int> resident_count(instance.residents.size(), 0);
  std::vector<int> hospital_count(instance.hospitals.size(), 0);
  for (const Pair& p : assignment.pairs()) {
    if (p.resident < 0 || p.resident >= instance.num_residents()) return false;
    if (p.hospital < 0 || p.hospital >= instance.num_hospitals()) return false;
    if (!tables.acceptable(p.resident, p.hospital)) return false;
    if (++resident_count[p.resident] > 1) return false;
    if (++hospital_count[p.hospital] > instance.hospitals[p.hospital].capacity) return false;
  }
  return true;
}

namespace {

void require_matching(const Instance& instance, const Assignment& assignment) {
  if (!is_matching(instance, assignment))
    throw PreconditionError("assignment is not a matching of the instance");
}

bool feasible(const Instance& instance, const MatchingView& view) {
  for (int e = 0; e < instance.num_regions(); ++e)
    if (view.region_load[e] > instance.regions[e].cap) return false;
  return true;
}

bool is_blocking(const Instance& instance, const Tables& tables, const MatchingView& view,
                 ResidentIndex r, HospitalIndex h) {
  if (!tables.acceptable(r, h)) return false;
  const HospitalIndex current = view.hospital_of[r];
  if (current == h) return false;
  if (current != kUnassigned && tables.resident_rank(r, current) < tables.resident_rank(r, h))
    return false;
  const auto& members = view.assignees[h];
  if (static_cast<int>(members.size()) < instance.hospitals[h].capacity) return true;
  for (ResidentIndex other : members)
    if (tables.hospital_rank(h, r) < tables.hospital_rank(h, other)) return true;
  return false;
}

BlockingWitness label(const Instance& instance, const Tables& tables, const MatchingView& view,
                      ResidentIndex r, HospitalIndex h) {
  BlockingWitness w{{r, h}, BlockingKind::Blocking, false, std::nullopt};

  // Least preferred assignee that h ranks below r.
  for (ResidentIndex other : view.assignees[h]) {
    if (tables.hospital_rank(h, r) >= tables.hospital_rank(h, other)) continue;
    if (!w.preferred_over || tables.hospital_rank(h, other) > tables.hospital_rank(h, *w.preferred_over))
      w.preferred_over = other;
  }

  const HospitalIndex current = view.hospital_of[r];
  w.move_feasible = true;
  for (int e = 0; e < instance.num_regions() && w.move_feasible; ++e) {
    int load = view.region_load[e];
    for (HospitalIndex member : instance.regions[e].hospitals) {
      if (member == current) --load;
      if (member == h) ++load;
    }
    if (load > instance.regions[e].cap) w.move_feasible = false;
  }

  if (w.move_feasible || w.preferred_over) w.kind = BlockingKind::StrongBlocking;
  return w;
}

}  // namespace

int region_load(const Instance& instance, const Assignment& matching, RegionIndex region) {
  if (region < 0 || region >= instance.num_regions())
    throw Error("unknown region #" + std::to_string(region));
  int load = 0;
  for (const Pair& p : matching.pairs())
    for (HospitalIndex h : instance.regions[region].hospitals)
      if (p.hospital == h) ++load;
  return load;
}

bool is_feasible(const Instance& instance, const Assignment& matching) {
  require_matching(instance, matching);
  return feasible(instance, MatchingView(instance, matching));
}

std::vector<Pair> blocking_pairs(const Instance& instance, const Assignment& matching) {
  require_matching(instance, matching);
  const Tables tables(instance);
  const MatchingView view(instance, matching);
  std::vector<Pair> out;
  for (int r = 0; r < instance.num_residents(); ++r)
    for (int h = 0; h < instance.num_hospitals(); ++h)
      if (is_blocking(instance, tables, view, r, h)) out.push_back({r, h});
  return out;
}

std::vector<BlockingWitness> label_blocking_pairs(const Instance& instance,
                                                  const Assignment& matching) {
  require_matching(instance, matching);
  const Tables tables(instance);
  const MatchingView view(instance, matching);
  std::vector<BlockingWitness> out;
  for (int r = 0; r < instance.num_residents(); ++r)
    for (int h = 0; h < instance.num_hospitals(); ++h)
      if (is_blocking(instance, tables, view, r, h))
        out.push_back(label(instance, tables, view, r, h));
  return out;
}

std::vector<BlockingWitness> strong_blocking_pairs(const Instance& instance,
                                                   const Assignment& matching) {
  require_matching(instance, matching);
  if (!feasible(instance, MatchingView(instance, matching)))
    throw PreconditionError("strong blocking pairs are defined for feasible matchings only");
  std::vector<BlockingWitness> out;
  for (auto& w : label_blocking_pairs(instance, matching))
    if (w.kind == BlockingKind::StrongBlocking) out.push_back(w);
  return out;
}

bool is_strongly_stable(const Instance& instance, const Assignment& matching) {
  require_matching(instance, matching);
  const Tables tables(instance);
  const MatchingView view(instance, matching);
  if (!feasible(instance, view)) return false;
  for (int r = 0; r < instance.num_residents(); ++r)
    for (HospitalIndex h : instance.residents[r].prefs)
      if (is_blocking(instance, tables, view, r, h) &&
          label(instance, tables, view, r, h).kind == BlockingKind::StrongBlocking)
        return false;
  return true;
}

}  // namespace hrrc
