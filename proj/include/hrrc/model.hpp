#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hrrc {

// Agents are addressed by their position in the instance (declaration order).
using ResidentIndex = int;
using HospitalIndex = int;
using RegionIndex = int;

inline constexpr HospitalIndex kUnassigned = -1;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its supported class.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Resident {
  std::string id;
  std::vector<HospitalIndex> prefs;  // most preferred first

  bool operator==(const Resident&) const = default;
};

struct Hospital {
  std::string id;
  int capacity = 0;
  std::vector<ResidentIndex> prefs;  // most preferred first

  bool operator==(const Hospital&) const = default;
};

struct Region {
  std::vector<HospitalIndex> hospitals;
  int cap = 0;

  bool operator==(const Region&) const = default;
};

/// An HR instance with regional caps. Plain value type; `validate` decides
/// whether the data is a well-formed instance.
struct Instance {
  std::vector<Resident> residents;
  std::vector<Hospital> hospitals;
  std::vector<Region> regions;

  bool operator==(const Instance&) const = default;

  int num_residents() const { return static_cast<int>(residents.size()); }
  int num_hospitals() const { return static_cast<int>(hospitals.size()); }
  int num_regions() const { return static_cast<int>(regions.size()); }

  std::optional<ResidentIndex> find_resident(std::string_view id) const;
  std::optional<HospitalIndex> find_hospital(std::string_view id) const;
  // Throwing variants.
  ResidentIndex resident_index(std::string_view id) const;
  HospitalIndex hospital_index(std::string_view id) const;
};

struct Pair {
  ResidentIndex resident = 0;
  HospitalIndex hospital = 0;

  auto operator<=>(const Pair&) const = default;
};

/// A set of resident-hospital pairs, kept sorted and duplicate-free.
/// Whether it is a matching is decided by `is_matching`, not by construction.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Pair p) const;
  void insert(Pair p);

  auto operator<=>(const Assignment&) const = default;

 private:
  std::vector<Pair> pairs_;
};

struct InstanceClass {
  int alpha = 0;  // longest resident list
  int beta = 0;   // longest hospital list
  int gamma = 0;  // largest region
  bool disjoint = true;

  bool operator==(const InstanceClass&) const = default;
};

struct Found {
  Assignment matching;
  bool operator==(const Found&) const = default;
};
struct NoneExists {
  bool operator==(const NoneExists&) const = default;
};
struct Unknown {
  std::string reason;
  bool operator==(const Unknown&) const = default;
};

using SolveOutcome = std::variant<Found, NoneExists, Unknown>;

std::string outcome_name(const SolveOutcome& outcome);

enum class ViolationKind {
  DuplicateAgentId,
  UnknownAgent,
  DuplicateInPrefs,
  NonMutualAcceptability,
  EmptyRegion,
  DuplicateRegion,
  NegativeCapacity,
  NegativeCap,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Lists every way `instance` fails to be a well-formed instance; empty means valid.
ValidationReport validate(const Instance& instance);

/// Throws PreconditionError carrying the report when `instance` is invalid.
void require_valid(const Instance& instance);

InstanceClass classify(const Instance& instance);

// AC(a): the agents on a's preference list.
std::vector<HospitalIndex> acceptable_hospitals(const Instance& instance, ResidentIndex r);
std::vector<ResidentIndex> acceptable_residents(const Instance& instance, HospitalIndex h);
/// Looks the agent up by id among residents first, then hospitals, and
/// returns the ids of its acceptable partners in sorted id order.
std::vector<std::string> acceptables(const Instance& instance, std::string_view agent_id);

/// CommonR(H'): residents acceptable to every hospital in `hospitals`, in
/// declaration order.
std::vector<ResidentIndex> common_residents(const Instance& instance,
                                            const std::vector<HospitalIndex>& hospitals);

/// The two-resident, two-hospital instance with one region of cap 1 that has
/// no strongly stable matching.
Instance example_g2();

/// Builds an instance from string ids. Unknown ids throw immediately; the
/// remaining structural checks are left to `validate`.
class InstanceBuilder {
 public:
  InstanceBuilder& resident(std::string id, std::vector<std::string> prefs);
  InstanceBuilder& hospital(std::string id, int capacity, std::vector<std::string> prefs);
  InstanceBuilder& region(std::vector<std::string> hospitals, int cap);
  Instance build() const;

 private:
  struct PendingAgent {
    std::string id;
    int capacity = 0;
    std::vector<std::string> prefs;
  };
  std::vector<PendingAgent> residents_;
  std::vector<PendingAgent> hospitals_;
  std::vector<std::pair<std::vector<std::string>, int>> regions_;
};

std::string describe(const Instance& instance, Pair pair);

}  // namespace hrrc
