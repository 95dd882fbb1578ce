#include <omp.h>

#include <bit>
#include <chrono>

#include "search_internal.hpp"

namespace wiener {

namespace {

// Fixed partition of the item space; independent of the worker count.
constexpr std::uint64_t kChunks = 1024;

struct ChunkTally {
  std::uint64_t matching = 0;
  std::optional<std::int64_t> best;
  std::vector<std::uint64_t> witness_items;
};

struct ItemSpace {
  const SearchConstraint& c;
  bool trees;
  std::uint64_t total;

  explicit ItemSpace(const SearchConstraint& constraint)
      : c(constraint),
        trees(constraint.graph_class == GraphClass::Trees),
        total(trees ? prufer_count(constraint.n) : edge_mask_count(constraint.n)) {}

  // Cheap rejections on the raw mask before building the graph.
  bool plausible(std::uint64_t item) const {
    if (trees) {
      return true;
    }
    const int edges = std::popcount(item);
    if (edges < c.n - 1) {
      return false;
    }
    return c.graph_class != GraphClass::Unicyclic || edges == c.n;
  }

  Graph decode(std::uint64_t item) const {
    return trees ? tree_from_prufer_rank(c.n, item) : graph_from_edge_mask(c.n, item);
  }
};

void scan_chunk(const ItemSpace& space, Objective objective, std::uint64_t begin,
                std::uint64_t end, ChunkTally& tally) {
  for (std::uint64_t item = begin; item < end; ++item) {
    if (!space.plausible(item)) {
      continue;
    }
    const Graph g = space.decode(item);
    if (!satisfies(g, space.c)) {
      continue;
    }
    ++tally.matching;
    const std::int64_t w = wiener(g);
    if (!tally.best || detail::improves(objective, w, *tally.best)) {
      tally.best = w;
      tally.witness_items.assign(1, item);
    } else if (w == *tally.best) {
      tally.witness_items.push_back(item);
    }
  }
}

}  // namespace

SearchReport extremal_search(const SearchConstraint& c, Objective objective,
                             const SearchOptions& options) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  const ItemSpace space(c);
  const std::uint64_t chunks = std::min(kChunks, space.total);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

  std::vector<ChunkTally> tallies(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
    const auto idx = static_cast<std::uint64_t>(ci);
    const std::uint64_t begin = space.total / chunks * idx + std::min(idx, space.total % chunks);
    const std::uint64_t end = begin + space.total / chunks + (idx < space.total % chunks ? 1 : 0);
    scan_chunk(space, objective, begin, end, tallies[idx]);
  }

  SearchReport report;
  report.constraint = c;
  report.objective = objective;
  report.scanned = space.total;
  std::vector<std::uint64_t> items;
  for (const ChunkTally& t : tallies) {
    report.matching += t.matching;
    if (!t.best) {
      continue;
    }
    if (!report.extremal_value || detail::improves(objective, *t.best, *report.extremal_value)) {
      report.extremal_value = t.best;
      items = t.witness_items;
    } else if (*t.best == *report.extremal_value) {
      items.insert(items.end(), t.witness_items.begin(), t.witness_items.end());
    }
  }

  std::vector<CanonicalForm> classes(items.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    classes[idx] = canonical_form(space.decode(items[idx]));
  }
  detail::fill_witnesses(report, std::move(classes));
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wiener
