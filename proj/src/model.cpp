#include "hrrc/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hrrc {

std::optional<ResidentIndex> Instance::find_resident(std::string_view id) const {
  for (int r = 0; r < num_residents(); ++r)
    if (residents[r].id == id) return r;
  return std::nullopt;
}

std::optional<HospitalIndex> Instance::find_hospital(std::string_view id) const {
  for (int h = 0; h < num_hospitals(); ++h)
    if (hospitals[h].id == id) return h;
  return std::nullopt;
}

ResidentIndex Instance::resident_index(std::string_view id) const {
  if (auto r = find_resident(id)) return *r;
  throw Error("unknown resident '" + std::string(id) + "'");
}

HospitalIndex Instance::hospital_index(std::string_view id) const {
  if (auto h = find_hospital(id)) return *h;
  throw Error("unknown hospital '" + std::string(id) + "'");
}

Assignment::Assignment(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Assignment::contains(Pair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

void Assignment::insert(Pair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

std::string outcome_name(const SolveOutcome& outcome) {
  struct Visitor {
    std::string operator()(const Found&) const { return "Found"; }
    std::string operator()(const NoneExists&) const { return "NoneExists"; }
    std::string operator()(const Unknown&) const { return "Unknown"; }
  };
  return std::visit(Visitor{}, outcome);
}

namespace {

template <typename Agent>
void check_unique_ids(const std::vector<Agent>& agents, std::string_view side,
                      ValidationReport& report) {
  std::set<std::string> seen;
  for (const auto& a : agents)
    if (!seen.insert(a.id).second)
      report.push_back({ViolationKind::DuplicateAgentId,
                        "duplicate " + std::string(side) + " id '" + a.id + "'"});
}

// Returns false when some entry is out of range; reports duplicates.
bool check_pref_list(const std::string& owner, const std::vector<int>& prefs, int bound,
                     ValidationReport& report) {
  bool in_range = true;
  std::set<int> seen;
  for (int x : prefs) {
    if (x < 0 || x >= bound) {
      report.push_back({ViolationKind::UnknownAgent,
                        "'" + owner + "' lists unknown agent #" + std::to_string(x)});
      in_range = false;
      continue;
    }
    if (!seen.insert(x).second)
      report.push_back({ViolationKind::DuplicateInPrefs,
                        "'" + owner + "' lists agent #" + std::to_string(x) + " more than once"});
  }
  return in_range;
}

std::string join_ids(const Instance& instance, const std::vector<HospitalIndex>& hs) {
  std::string out = "{";
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (i) out += ",";
    int h = hs[i];
    out += (h >= 0 && h < instance.num_hospitals()) ? instance.hospitals[h].id
                                                    : "#" + std::to_string(h);
  }
  return out + "}";
}

}  // namespace

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  const int nr = instance.num_residents();
  const int nh = instance.num_hospitals();

  check_unique_ids(instance.residents, "resident", report);
  check_unique_ids(instance.hospitals, "hospital", report);

  bool lists_in_range = true;
  for (const auto& r : instance.residents)
    lists_in_range &= check_pref_list(r.id, r.prefs, nh, report);
  for (const auto& h : instance.hospitals) {
    lists_in_range &= check_pref_list(h.id, h.prefs, nr, report);
    if (h.capacity < 0)
      report.push_back({ViolationKind::NegativeCapacity,
                        "hospital '" + h.id + "' has negative capacity " +
                            std::to_string(h.capacity)});
  }

  if (lists_in_range) {
    std::set<std::pair<int, int>> from_residents, from_hospitals;
    for (int r = 0; r < nr; ++r)
      for (int h : instance.residents[r].prefs) from_residents.insert({r, h});
    for (int h = 0; h < nh; ++h)
      for (int r : instance.hospitals[h].prefs) from_hospitals.insert({r, h});
    for (auto [r, h] : from_residents)
      if (!from_hospitals.count({r, h}))
        report.push_back({ViolationKind::NonMutualAcceptability,
                          "resident '" + instance.residents[r].id + "' lists '" +
                              instance.hospitals[h].id + "' but not vice versa"});
    for (auto [r, h] : from_hospitals)
      if (!from_residents.count({r, h}))
        report.push_back({ViolationKind::NonMutualAcceptability,
                          "hospital '" + instance.hospitals[h].id + "' lists '" +
                              instance.residents[r].id + "' but not vice versa"});
  }

  std::map<std::set<int>, int> region_sets;
  for (int e = 0; e < instance.num_regions(); ++e) {
    const Region& region = instance.regions[e];
    const std::string name = "region " + join_ids(instance, region.hospitals);
    if (region.hospitals.empty())
      report.push_back({ViolationKind::EmptyRegion, name + " is empty"});
    check_pref_list(name, region.hospitals, nh, report);
    if (region.cap < 0)
      report.push_back({ViolationKind::NegativeCap,
                        name + " has negative cap " + std::to_string(region.cap)});
    std::set<int> members(region.hospitals.begin(), region.hospitals.end());
    if (!members.empty() && !region_sets.emplace(members, e).second)
      report.push_back({ViolationKind::DuplicateRegion, name + " is declared more than once"});
  }
  return report;
}

void require_valid(const Instance& instance) {
  auto report = validate(instance);
  if (report.empty()) return;
  std::string message = "invalid instance:";
  for (const auto& v : report) message += "\n  " + v.message;
  throw PreconditionError(message);
}

InstanceClass classify(const Instance& instance) {
  require_valid(instance);
  InstanceClass out;
  for (const auto& r : instance.residents)
    out.alpha = std::max(out.alpha, static_cast<int>(r.prefs.size()));
  for (const auto& h : instance.hospitals)
    out.beta = std::max(out.beta, static_cast<int>(h.prefs.size()));
  std::vector<int> owner(instance.hospitals.size(), -1);
  for (int e = 0; e < instance.num_regions(); ++e) {
    const auto& region = instance.regions[e];
    out.gamma = std::max(out.gamma, static_cast<int>(region.hospitals.size()));
    for (int h : region.hospitals) {
      if (owner[h] != -1 && owner[h] != e) out.disjoint = false;
      owner[h] = e;
    }
  }
  return out;
}

std::vector<HospitalIndex> acceptable_hospitals(const Instance& instance, ResidentIndex r) {
  if (r < 0 || r >= instance.num_residents())
    throw Error("unknown resident #" + std::to_string(r));
  auto out = instance.residents[r].prefs;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ResidentIndex> acceptable_residents(const Instance& instance, HospitalIndex h) {
  if (h < 0 || h >= instance.num_hospitals())
    throw Error("unknown hospital #" + std::to_string(h));
  auto out = instance.hospitals[h].prefs;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> acceptables(const Instance& instance, std::string_view agent_id) {
  std::vector<std::string> ids;
  if (auto r = instance.find_resident(agent_id)) {
    for (int h : instance.residents[*r].prefs) ids.push_back(instance.hospitals[h].id);
  } else if (auto h = instance.find_hospital(agent_id)) {
    for (int x : instance.hospitals[*h].prefs) ids.push_back(instance.residents[x].id);
  } else {
    throw Error("unknown agent '" + std::string(agent_id) + "'");
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<ResidentIndex> common_residents(const Instance& instance,
                                            const std::vector<HospitalIndex>& hospitals) {
  if (hospitals.empty()) throw Error("common_residents needs a non-empty hospital set");
  std::vector<ResidentIndex> common = acceptable_residents(instance, hospitals.front());
  for (std::size_t i = 1; i < hospitals.size(); ++i) {
    auto next = acceptable_residents(instance, hospitals[i]);
    std::vector<ResidentIndex> meet;
    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                          std::back_inserter(meet));
    common = std::move(meet);
  }
  return common;
}

Instance example_g2() {
  return InstanceBuilder{}
      .resident("r1", {"h1", "h2"})
      .resident("r2", {"h2", "h1"})
      .hospital("h1", 1, {"r2", "r1"})
      .hospital("h2", 1, {"r1", "r2"})
      .region({"h1", "h2"}, 1)
      .build();
}

InstanceBuilder& InstanceBuilder::resident(std::string id, std::vector<std::string> prefs) {
  residents_.push_back({std::move(id), 0, std::move(prefs)});
  return *this;
}

InstanceBuilder& InstanceBuilder::hospital(std::string id, int capacity,
                                           std::vector<std::string> prefs) {
  hospitals_.push_back({std::move(id), capacity, std::move(prefs)});
  return *this;
}

InstanceBuilder& InstanceBuilder::region(std::vector<std::string> hospitals, int cap) {
  regions_.emplace_back(std::move(hospitals), cap);
  return *this;
}

Instance InstanceBuilder::build() const {
  std::unordered_map<std::string, int> rindex, hindex;
  for (std::size_t i = 0; i < residents_.size(); ++i) rindex.emplace(residents_[i].id, int(i));
  for (std::size_t i = 0; i < hospitals_.size(); ++i) hindex.emplace(hospitals_[i].id, int(i));
  auto lookup = [](const auto& index, const std::string& id, std::string_view side) {
    auto it = index.find(id);
    if (it == index.end()) throw Error("unknown " + std::string(side) + " '" + id + "'");
    return it->second;
  };

  Instance out;
  for (const auto& r : residents_) {
    Resident res{r.id, {}};
    for (const auto& h : r.prefs) res.prefs.push_back(lookup(hindex, h, "hospital"));
    out.residents.push_back(std::move(res));
  }
  for (const auto& h : hospitals_) {
    Hospital hos{h.id, h.capacity, {}};
    for (const auto& r : h.prefs) hos.prefs.push_back(lookup(rindex, r, "resident"));
    out.hospitals.push_back(std::move(hos));
  }
  for (const auto& [members, cap] : regions_) {
    Region region{{}, cap};
    for (const auto& h : members) region.hospitals.push_back(lookup(hindex, h, "hospital"));
    out.regions.push_back(std::move(region));
  }
  return out;
}

std::string describe(const Instance& instance, Pair pair) {
  std::ostringstream os;
  os << "(" << instance.residents.at(pair.resident).id << ", "
     << instance.hospitals.at(pair.hospital).id << ")";
  return os.str();
}

}  // namespace hrrc
