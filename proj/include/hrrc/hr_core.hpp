#pragma once

#include "hrrc/model.hpp"

namespace hrrc {

/// Resident-oriented Gale-Shapley. Returns the resident-optimal stable
/// matching of the underlying HR instance in O(m + |H| + |R|) time, where m
/// is the number of acceptable pairs.
///
/// Regions take no part in the run. With `ignore_regions == false` an
/// instance that declares regions is rejected, so callers have to opt in to
/// dropping the caps explicitly.
Assignment rgs(const Instance& instance, bool ignore_regions = true);

/// Caps every capacity at the length of the hospital's list:
/// q'(h) = min(q(h), |AC(h)|). Idempotent; keeps the strongly stable set.
Instance shrink(const Instance& instance);

}  // namespace hrrc
