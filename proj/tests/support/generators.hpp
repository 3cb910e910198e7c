#pragma once

#include <random>

#include "hrrc/model.hpp"

namespace hrrc::testing {

using Rng = std::mt19937_64;

// Bounds for random instances. A bound of 0 on a list length means unbounded.
struct GenParams {
  int min_residents = 0;
  int max_residents = 5;
  int min_hospitals = 0;
  int max_hospitals = 5;
  int alpha = 0;         // max resident list length
  int beta = 0;          // max hospital list length
  int gamma = 2;         // max region size; 0 means no regions
  bool disjoint = true;  // regions pairwise disjoint
  int max_capacity = 3;
  double edge_probability = 0.5;
  double region_probability = 0.6;
};

Instance random_instance(Rng& rng, const GenParams& params);

/// Random (2,2,2)-disjoint instance with 2x2 blocks planted alongside
/// unstructured agents. At most `max_agents` residents and hospitals each.
Instance random_222_disjoint(Rng& rng, int max_agents);

/// Same as `instance` with agents renamed; preferences and regions unchanged.
Instance renamed(const Instance& instance, const std::string& prefix);

}  // namespace hrrc::testing
