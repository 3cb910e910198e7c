#include "hrrc/exhaustive.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <iostream>
#include <optional>
#include <thread>

#include "hrrc/detail/tables.hpp"

namespace hrrc {

namespace {

using detail::Tables;

// Read-only data shared by every worker.
struct Plan {
  Plan(const Instance& inst, bool strong) : instance(inst), tables(inst), strong(strong) {
    const int nr = inst.num_residents();
    checks_at.resize(nr);
    if (!strong) return;
    // A pair (r,h) is fully determined once r, every resident acceptable to h
    // and every resident acceptable to a hospital sharing a region with h are
    // decided. Residents are decided in declaration order.
    std::vector<int> last_relevant(inst.num_hospitals(), -1);
    for (int h = 0; h < inst.num_hospitals(); ++h) {
      int last = -1;
      auto absorb = [&](HospitalIndex g) {
        for (ResidentIndex r : inst.hospitals[g].prefs) last = std::max(last, r);
      };
      absorb(h);
      for (RegionIndex e : tables.regions_of(h))
        for (HospitalIndex g : inst.regions[e].hospitals) absorb(g);
      last_relevant[h] = last;
    }
    for (int r = 0; r < nr; ++r)
      for (HospitalIndex h : inst.residents[r].prefs)
        checks_at[std::max(r, last_relevant[h])].push_back({r, h});
  }

  const Instance& instance;
  Tables tables;
  bool strong;
  std::vector<std::vector<Pair>> checks_at;
};

class Walker {
 public:
  using Sink = std::function<bool(const Assignment&)>;

  Walker(const Plan& plan, Sink sink, std::function<bool()> cancelled = {})
      : plan_(plan),
        inst_(plan.instance),
        sink_(std::move(sink)),
        cancelled_(std::move(cancelled)),
        hospital_of_(inst_.residents.size(), kUnassigned),
        count_(inst_.hospitals.size(), 0),
        load_(inst_.regions.size(), 0),
        assignees_(inst_.hospitals.size()) {}

  // Returns false once the sink or the cancel hook asks to stop.
  bool run() { return inst_.residents.empty() ? emit() : descend(0); }

  // Explores only the subtree where the first resident takes `choice`.
  bool run_first(HospitalIndex choice) { return branch(0, choice); }

 private:
  bool descend(int d) {
    if (d == inst_.num_residents()) return emit();
    if (cancelled_ && cancelled_()) return false;
    for (HospitalIndex h : inst_.residents[d].prefs)
      if (!branch(d, h)) return false;
    return branch(d, kUnassigned);
  }

  bool branch(int d, HospitalIndex choice) {
    if (!admissible(d, choice)) return true;
    apply(d, choice);
    const bool keep_going = settled_pairs_ok(d) ? descend(d + 1) : true;
    undo(d, choice);
    return keep_going;
  }

  bool emit() {
    std::vector<Pair> pairs;
    for (ResidentIndex r = 0; r < inst_.num_residents(); ++r)
      if (hospital_of_[r] != kUnassigned) pairs.push_back({r, hospital_of_[r]});
    return sink_(Assignment(std::move(pairs)));
  }

  bool has_room(HospitalIndex h) const {
    if (count_[h] >= inst_.hospitals[h].capacity) return false;
    for (RegionIndex e : plan_.tables.regions_of(h))
      if (load_[e] >= inst_.regions[e].cap) return false;
    return true;
  }

  bool admissible(ResidentIndex r, HospitalIndex choice) const {
    if (choice != kUnassigned && !has_room(choice)) return false;
    if (!plan_.strong) return true;
    const Tables& t = plan_.tables;
    // r would rather be at any hospital listed before its choice; one that
    // already holds somebody it ranks below r is a strong blocking pair
    // whatever happens later.
    for (HospitalIndex h : inst_.residents[r].prefs) {
      if (h == choice) break;
      for (ResidentIndex other : assignees_[h])
        if (t.hospital_rank(h, r) < t.hospital_rank(h, other)) return false;
    }
    if (choice == kUnassigned) return true;
    // Same test from the hospital's side, against residents already placed.
    for (ResidentIndex better : inst_.hospitals[choice].prefs) {
      if (better == r) break;
      if (better > r) continue;
      const HospitalIndex held = hospital_of_[better];
      if (held == kUnassigned || t.resident_rank(better, choice) < t.resident_rank(better, held))
        return false;
    }
    return true;
  }

  void apply(ResidentIndex r, HospitalIndex choice) {
    hospital_of_[r] = choice;
    if (choice == kUnassigned) return;
    ++count_[choice];
    assignees_[choice].push_back(r);
    for (RegionIndex e : plan_.tables.regions_of(choice)) ++load_[e];
  }

  void undo(ResidentIndex r, HospitalIndex choice) {
    hospital_of_[r] = kUnassigned;
    if (choice == kUnassigned) return;
    --count_[choice];
    assignees_[choice].pop_back();
    for (RegionIndex e : plan_.tables.regions_of(choice)) --load_[e];
  }

  bool settled_pairs_ok(int d) const {
    if (!plan_.strong) return true;
    for (const Pair& p : plan_.checks_at[d])
      if (strongly_blocks(p.resident, p.hospital)) return false;
    return true;
  }

  bool strongly_blocks(ResidentIndex r, HospitalIndex h) const {
    const Tables& t = plan_.tables;
    const HospitalIndex current = hospital_of_[r];
    if (current == h) return false;
    if (current != kUnassigned && t.resident_rank(r, current) < t.resident_rank(r, h)) return false;
    for (ResidentIndex other : assignees_[h])
      if (t.hospital_rank(h, r) < t.hospital_rank(h, other)) return true;
    if (count_[h] >= inst_.hospitals[h].capacity) return false;
    for (RegionIndex e : t.regions_of(h)) {
      int load = load_[e] + 1;
      if (current != kUnassigned) {
        const auto& members = inst_.regions[e].hospitals;
        if (std::find(members.begin(), members.end(), current) != members.end()) --load;
      }
      if (load > inst_.regions[e].cap) return false;
    }
    return true;
  }

  const Plan& plan_;
  const Instance& inst_;
  Sink sink_;
  std::function<bool()> cancelled_;
  std::vector<HospitalIndex> hospital_of_;
  std::vector<int> count_;
  std::vector<int> load_;
  std::vector<std::vector<ResidentIndex>> assignees_;
};

// The first resident's options, in canonical order.
std::vector<HospitalIndex> first_choices(const Instance& instance) {
  std::vector<HospitalIndex> out = instance.residents.front().prefs;
  out.push_back(kUnassigned);
  return out;
}

void run_pool(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) task(i);
  };
  std::vector<std::thread> threads;
  const unsigned n = std::min<std::size_t>(jobs, tasks);
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
}

bool parallel(const Instance& instance, const SearchOptions& options) {
  return options.jobs > 1 && !instance.residents.empty();
}

// Calls `visit` for every matching of the search, in canonical order.
EnumerationStats search_all(const Instance& instance, bool strong,
                            const std::function<bool(const Assignment&)>& visit,
                            const SearchOptions& options) {
  require_valid(instance);
  const Plan plan(instance, strong);
  EnumerationStats stats;
  auto counted = [&](const Assignment& m) {
    ++stats.emitted;
    if (options.warn_after != 0 && stats.emitted == options.warn_after && !stats.warned) {
      stats.warned = true;
      std::clog << "warning: enumeration passed " << options.warn_after << " matchings\n";
    }
    if (!visit(m)) {
      stats.stopped = true;
      return false;
    }
    return true;
  };

  if (!parallel(instance, options)) {
    Walker(plan, counted).run();
    return stats;
  }
  const auto choices = first_choices(instance);
  std::vector<std::vector<Assignment>> found(choices.size());
  run_pool(choices.size(), options.jobs, [&](std::size_t i) {
    Walker(plan, [&found, i](const Assignment& m) {
      found[i].push_back(m);
      return true;
    }).run_first(choices[i]);
  });
  for (const auto& branch : found)
    for (const auto& m : branch)
      if (!counted(m)) return stats;
  return stats;
}

}  // namespace

EnumerationStats enumerate_feasible(const Instance& instance,
                                    const std::function<bool(const Assignment&)>& visit,
                                    const SearchOptions& options) {
  return search_all(instance, false, visit, options);
}

std::vector<Assignment> feasible_matchings(const Instance& instance, const SearchOptions& options) {
  std::vector<Assignment> out;
  search_all(instance, false, [&](const Assignment& m) {
    out.push_back(m);
    return true;
  }, options);
  return out;
}

std::vector<Assignment> strongly_stable_set(const Instance& instance, const SearchOptions& options) {
  std::vector<Assignment> out;
  search_all(instance, true, [&](const Assignment& m) {
    out.push_back(m);
    return true;
  }, options);
  return out;
}

SolveOutcome exists_strongly_stable(const Instance& instance, const SearchOptions& options) {
  require_valid(instance);
  const Plan plan(instance, true);
  std::optional<Assignment> first;

  if (!parallel(instance, options)) {
    Walker(plan, [&](const Assignment& m) {
      first = m;
      return false;
    }).run();
  } else {
    const auto choices = first_choices(instance);
    std::vector<std::optional<Assignment>> found(choices.size());
    // Lowest branch index with a hit so far; later branches give up.
    std::atomic<std::size_t> best{SIZE_MAX};
    run_pool(choices.size(), options.jobs, [&](std::size_t i) {
      Walker walker(
          plan,
          [&, i](const Assignment& m) {
            found[i] = m;
            std::size_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            return false;
          },
          [&best, i] { return best.load(std::memory_order_relaxed) < i; });
      walker.run_first(choices[i]);
    });
    for (auto& f : found)
      if (f) {
        first = std::move(f);
        break;
      }
  }
  if (first) return Found{*first};
  return NoneExists{};
}

}  // namespace hrrc
