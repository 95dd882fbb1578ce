#pragma once

#include <algorithm>
#include <vector>

#include "wiener/canonical.hpp"
#include "wiener/search.hpp"

namespace wiener::detail {

/// Sort and deduplicate class keys, record the class count and keep the
/// first kWitnessCap representatives.
void fill_witnesses(SearchReport& report, std::vector<CanonicalForm> classes);

inline bool improves(Objective objective, std::int64_t candidate, std::int64_t incumbent) {
  return objective == Objective::Min ? candidate < incumbent : candidate > incumbent;
}

}  // namespace wiener::detail
