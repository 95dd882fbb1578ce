#include <string>

#include "search_internal.hpp"
#include "wiener/canonical.hpp"

namespace wiener {

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::AllConnected: return "connected";
    case GraphClass::Trees: return "trees";
    case GraphClass::Unicyclic: return "unicyclic";
  }
  return "?";
}

std::string_view to_string(Objective o) { return o == Objective::Min ? "min" : "max"; }

std::optional<GraphClass> parse_graph_class(std::string_view text) {
  if (text == "connected" || text == "all") return GraphClass::AllConnected;
  if (text == "trees" || text == "tree") return GraphClass::Trees;
  if (text == "unicyclic") return GraphClass::Unicyclic;
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "min") return Objective::Min;
  if (text == "max") return Objective::Max;
  return std::nullopt;
}

void validate(const SearchConstraint& c) {
  const bool trees = c.graph_class == GraphClass::Trees;
  const int lo = trees ? 2 : 3;
  const int hi = trees ? 10 : 8;
  if (c.n < lo || c.n > hi) {
    throw SearchRangeError(std::string(to_string(c.graph_class)) + " search supports " +
                           std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " +
                           std::to_string(c.n));
  }
  if (c.pendant_k && *c.pendant_k < 0) {
    throw SearchRangeError("pendant count must be non-negative");
  }
  if (c.cut_s && *c.cut_s < 0) {
    throw SearchRangeError("cut-vertex count must be non-negative");
  }
}

bool satisfies(const Graph& g, const SearchConstraint& c) {
  if (!is_connected(g)) {
    return false;
  }
  if (c.graph_class == GraphClass::Trees && g.size() != g.order() - 1) {
    return false;
  }
  if (c.graph_class == GraphClass::Unicyclic && g.size() != g.order()) {
    return false;
  }
  if (c.pendant_k && set_size(pendant_vertices(g)) != *c.pendant_k) {
    return false;
  }
  if (c.cut_s && set_size(cut_vertices(g)) != *c.cut_s) {
    return false;
  }
  return true;
}

namespace detail {

void fill_witnesses(SearchReport& report, std::vector<CanonicalForm> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  report.witness_classes = classes.size();
  report.witnesses.clear();
  for (std::size_t i = 0; i < classes.size() && i < kWitnessCap; ++i) {
    report.witnesses.push_back(from_canonical(classes[i]));
  }
}

}  // namespace detail

}  // namespace wiener
