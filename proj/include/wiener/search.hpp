#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

enum class GraphClass { AllConnected, Trees, Unicyclic };
enum class Objective { Min, Max };

std::string_view to_string(GraphClass c);
std::string_view to_string(Objective o);
std::optional<GraphClass> parse_graph_class(std::string_view text);
std::optional<Objective> parse_objective(std::string_view text);

class SearchRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct SearchConstraint {
  int n = 0;
  GraphClass graph_class = GraphClass::AllConnected;
  std::optional<int> pendant_k;
  std::optional<int> cut_s;

  friend bool operator==(const SearchConstraint&, const SearchConstraint&) = default;
};

/// Throws SearchRangeError when n is outside the enumerator's range
/// (connected/unicyclic: 3..8, trees: 2..10) or a count is negative.
void validate(const SearchConstraint& c);

inline constexpr std::size_t kWitnessCap = 16;

struct SearchReport {
  SearchConstraint constraint;
  Objective objective = Objective::Min;
  /// Empty when no graph satisfies the constraint.
  std::optional<std::int64_t> extremal_value;
  /// Canonical representatives sorted by canonical code, at most kWitnessCap.
  std::vector<Graph> witnesses;
  /// Number of isomorphism classes attaining the extremum (may exceed the cap).
  std::size_t witness_classes = 0;
  std::uint64_t scanned = 0;
  std::uint64_t matching = 0;
  double elapsed_ms = 0.0;

  bool empty_class() const { return !extremal_value.has_value(); }
};

struct SearchOptions {
  /// Worker count; 0 means the OpenMP default.
  int threads = 0;
};

// Enumeration substrate. Edge masks index the pairs column by column:
// bit j(j-1)/2 + i stands for {i, j}, i < j.
std::uint64_t edge_mask_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t prufer_count(int n);
/// Decode the Prüfer sequence whose base-n digits spell `rank`.
Graph tree_from_prufer_rank(int n, std::uint64_t rank);

/// Every connected labelled graph on n vertices (3 <= n <= 8), once each.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);
/// Every labelled tree on n vertices (2 <= n <= 10), once each.
void enumerate_trees(int n, const std::function<void(const Graph&)>& visit);

/// Partitioned OpenMP scan. Per-chunk partial results are merged into a
/// report that does not depend on the thread count.
SearchReport extremal_search(const SearchConstraint& c, Objective objective,
                             const SearchOptions& options = {});

/// Single-threaded reference: walks the stream enumerators and deduplicates
/// witnesses with pairwise isomorphism tests.
SearchReport extremal_search_serial(const SearchConstraint& c, Objective objective);

/// True when g satisfies the class and count constraints (g assumed on c.n vertices).
bool satisfies(const Graph& g, const SearchConstraint& c);

}  // namespace wiener
