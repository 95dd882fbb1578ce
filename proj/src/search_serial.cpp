// Reference implementation of the extremal search. Deliberately plain: one
// pass over the stream enumerators, witnesses deduplicated with pairwise
// isomorphism tests. The parallel kernel is checked against it.

#include <chrono>

#include "search_internal.hpp"

namespace wiener {

SearchReport extremal_search_serial(const SearchConstraint& c, Objective objective) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.constraint = c;
  report.objective = objective;
  std::vector<Graph> representatives;

  auto consider = [&](const Graph& g) {
    if (!satisfies(g, c)) {
      return;
    }
    ++report.matching;
    const std::int64_t w = wiener(g);
    if (!report.extremal_value || detail::improves(objective, w, *report.extremal_value)) {
      report.extremal_value = w;
      representatives.assign(1, g);
      return;
    }
    if (w != *report.extremal_value) {
      return;
    }
    for (const Graph& rep : representatives) {
      if (are_isomorphic(rep, g)) {
        return;
      }
    }
    representatives.push_back(g);
  };

  if (c.graph_class == GraphClass::Trees) {
    report.scanned = prufer_count(c.n);
    enumerate_trees(c.n, consider);
  } else {
    report.scanned = edge_mask_count(c.n);
    enumerate_connected(c.n, consider);
  }

  std::vector<CanonicalForm> classes;
  classes.reserve(representatives.size());
  for (const Graph& rep : representatives) {
    classes.push_back(canonical_form(rep));
  }
  detail::fill_witnesses(report, std::move(classes));
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wiener
