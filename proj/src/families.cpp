#include "wiener/families.hpp"

#include <algorithm>

#include "wiener/graph_ops.hpp"

namespace wiener {

namespace {

[[noreturn]] void reject(const FamilySpec& spec, const std::string& why) {
  std::string text;
  try {
    text = to_string(spec);
  } catch (const std::exception&) {
    text = "<malformed>";
  }
  throw FamilyParameterError(text + ": " + why);
}

std::size_t arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
    case FamilyKind::Star:
      return 1;
    case FamilyKind::Broom:
    case FamilyKind::Spider:
    case FamilyKind::BalancedSpider:
    case FamilyKind::UnicyclicPendant:
    case FamilyKind::UnicyclicTail:
    case FamilyKind::Kite:
      return 2;
    case FamilyKind::DoubleBroom:
    case FamilyKind::Dumbbell:
      return 3;
    case FamilyKind::Octopus:
      return 0;
  }
  return 0;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph spider_with_legs(const std::vector<int>& legs) {
  Graph g(1);
  for (int len : legs) {
    g = attach_path(g, 0, len);
  }
  return g;
}

}  // namespace

FamilySpec FamilySpec::octopus(int n, const std::vector<int>& legs) {
  FamilySpec spec{FamilyKind::Octopus, {static_cast<int>(legs.size()), n}};
  spec.params.insert(spec.params.end(), legs.begin(), legs.end());
  return spec;
}

FamilySpec FamilySpec::balanced_octopus(int n, int m) {
  if (m < 2 || m > n) {
    throw FamilyParameterError("balanced octopus needs 2 <= m <= n, got m=" + std::to_string(m) +
                               ", n=" + std::to_string(n));
  }
  std::vector<int> legs(static_cast<std::size_t>(m), n / m);
  for (int i = 0; i < n % m; ++i) {
    ++legs[static_cast<std::size_t>(i)];
  }
  return octopus(n, legs);
}

std::vector<int> balanced_spider_legs(int n, int k) {
  const int q = (n - 1) / k;
  const int r = n - 1 - k * q;
  std::vector<int> legs(static_cast<std::size_t>(r), q + 1);
  legs.insert(legs.end(), static_cast<std::size_t>(k - r), q);
  return legs;
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (spec.kind == FamilyKind::Octopus) {
    if (p.size() < 2 || p[0] < 2) {
      reject(spec, "octopus needs a clique of m >= 2 vertices");
    }
    if (p.size() != static_cast<std::size_t>(p[0]) + 2) {
      reject(spec, "octopus needs exactly m leg lengths");
    }
    long sum = 0;
    for (std::size_t i = 2; i < p.size(); ++i) {
      if (p[i] < 1) {
        reject(spec, "octopus leg lengths must be >= 1");
      }
      sum += p[i];
    }
    if (sum != p[1]) {
      reject(spec, "octopus leg lengths must sum to n");
    }
  } else {
    if (p.size() != arity(spec.kind)) {
      reject(spec, "wrong number of parameters");
    }
    switch (spec.kind) {
      case FamilyKind::Path:
      case FamilyKind::Complete:
        if (p[0] < 1) reject(spec, "order must be >= 1");
        break;
      case FamilyKind::Cycle:
        if (p[0] < 3) reject(spec, "cycle needs n >= 3");
        break;
      case FamilyKind::Star:
        if (p[0] < 2) reject(spec, "star needs n >= 2");
        break;
      case FamilyKind::DoubleBroom:
        if (p[0] < 1 || p[1] < 1 || p[2] < 1) reject(spec, "double broom needs k, l, d >= 1");
        break;
      case FamilyKind::Broom:
        if (p[0] < 1) reject(spec, "broom needs a spine of d >= 1 vertices");
        if (p[1] < 0) reject(spec, "broom needs k >= 0 leaves");
        break;
      case FamilyKind::Spider:
        if (p[0] < 1) reject(spec, "spider needs l >= 1 legs");
        if (p[1] < 1) reject(spec, "spider needs legs of q >= 1 vertices");
        break;
      case FamilyKind::BalancedSpider:
        if (p[1] < 2 || p[1] > p[0] - 2) reject(spec, "balanced spider needs 2 <= k <= n-2");
        break;
      case FamilyKind::UnicyclicPendant:
        if (p[1] < 3 || p[1] > p[0]) reject(spec, "pendant unicyclic graph needs 3 <= g <= n");
        break;
      case FamilyKind::UnicyclicTail:
        if (p[1] < 3 || p[1] >= p[0]) reject(spec, "tailed unicyclic graph needs 3 <= g < n");
        break;
      case FamilyKind::Dumbbell:
        if (p[0] < 3 || p[1] < 3) reject(spec, "dumbbell cycles need m1, m2 >= 3");
        if (p[2] < p[0] + p[1] - 1) reject(spec, "dumbbell needs n >= m1 + m2 - 1");
        break;
      case FamilyKind::Kite:
        if (p[0] < 4) reject(spec, "kite needs n >= 4");
        if (p[1] < 0 || p[1] > p[0] - 3) reject(spec, "kite needs 0 <= k <= n-3");
        break;
      case FamilyKind::Octopus:
        break;
    }
  }
  long n = 0;
  switch (spec.kind) {
    case FamilyKind::DoubleBroom: n = static_cast<long>(p[0]) + p[1] + p[2]; break;
    case FamilyKind::Broom: n = static_cast<long>(p[0]) + p[1]; break;
    case FamilyKind::Spider: n = static_cast<long>(p[0]) * p[1] + 1; break;
    case FamilyKind::Dumbbell: n = p[2]; break;
    case FamilyKind::Octopus: n = p[1]; break;
    default: n = p[0]; break;
  }
  if (n > kMaxVertices) {
    reject(spec, "more than 64 vertices");
  }
}

int vertex_count(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::DoubleBroom: return p[0] + p[1] + p[2];
    case FamilyKind::Broom: return p[0] + p[1];
    case FamilyKind::Spider: return p[0] * p[1] + 1;
    case FamilyKind::Dumbbell: return p[2];
    case FamilyKind::Octopus: return p[1];
    default: return p[0];
  }
}

Graph build(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path:
      return path_graph(p[0]);
    case FamilyKind::Cycle:
      return cycle_graph(p[0]);
    case FamilyKind::Complete:
      return complete_graph(p[0]);
    case FamilyKind::Star:
      return attach_pendants(Graph(1), 0, p[0] - 1);
    case FamilyKind::DoubleBroom: {
      const int d = p[2];
      return attach_pendants(attach_pendants(path_graph(d), 0, p[0]), d - 1, p[1]);
    }
    case FamilyKind::Broom:
      return attach_pendants(path_graph(p[0]), 0, p[1]);
    case FamilyKind::Spider:
      return spider_with_legs(std::vector<int>(static_cast<std::size_t>(p[0]), p[1]));
    case FamilyKind::BalancedSpider:
      return spider_with_legs(balanced_spider_legs(p[0], p[1]));
    case FamilyKind::UnicyclicPendant:
      return attach_pendants(cycle_graph(p[1]), 0, p[0] - p[1]);
    case FamilyKind::UnicyclicTail:
      return attach_path(cycle_graph(p[1]), 0, p[0] - p[1]);
    case FamilyKind::Dumbbell: {
      const int m1 = p[0];
      const int m2 = p[1];
      const int n = p[2];
      Graph left = cycle_graph(m1);
      if (n == m1 + m2 - 1) {
        return identify(left, 0, cycle_graph(m2), 0).graph;
      }
      // Second cycle takes m1..m1+m2-1; the inner path vertices follow.
      Graph g(n);
      for (const Edge& e : left.edges()) g.add_edge(e.u, e.v);
      for (const Edge& e : cycle_graph(m2).edges()) g.add_edge(m1 + e.u, m1 + e.v);
      Vertex prev = 0;
      for (Vertex inner = m1 + m2; inner < n; ++inner) {
        g.add_edge(prev, inner);
        prev = inner;
      }
      g.add_edge(prev, m1);
      return g;
    }
    case FamilyKind::Kite:
      return attach_pendants(complete_graph(p[0] - p[1]), 0, p[1]);
    case FamilyKind::Octopus: {
      const int m = p[0];
      Graph g = complete_graph(m);
      for (Vertex i = 0; i < m; ++i) {
        g = attach_path(g, i, p[static_cast<std::size_t>(i) + 2] - 1);
      }
      return g;
    }
  }
  throw FamilyParameterError("unknown family kind");
}

int pendant_count_of(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path:
      return p[0] >= 2 ? 2 : 0;
    case FamilyKind::Cycle:
    case FamilyKind::Dumbbell:
      return 0;
    case FamilyKind::Complete:
      return p[0] == 2 ? 2 : 0;
    case FamilyKind::Star:
      return p[0] == 2 ? 2 : p[0] - 1;
    case FamilyKind::DoubleBroom:
      return p[0] + p[1];
    case FamilyKind::Broom: {
      const int d = p[0];
      const int k = p[1];
      if (d == 1) return k >= 2 ? k : 2 * k;  // star K_{1,k}; K_2 has two ends
      return k >= 2 ? k + 1 : 2;
    }
    case FamilyKind::Spider:
      return p[0] <= 2 ? 2 : p[0];
    case FamilyKind::BalancedSpider:
      return p[1];
    case FamilyKind::UnicyclicPendant:
      return p[0] - p[1];
    case FamilyKind::UnicyclicTail:
      return 1;
    case FamilyKind::Kite:
      return p[1];
    case FamilyKind::Octopus: {
      if (p[0] == 2) return 2;  // K_2 with two legs is a path
      int count = 0;
      for (std::size_t i = 2; i < p.size(); ++i) count += p[i] >= 2 ? 1 : 0;
      return count;
    }
  }
  return 0;
}

int cut_count_of(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path:
      return p[0] >= 3 ? p[0] - 2 : 0;
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
      return 0;
    case FamilyKind::Star:
      return p[0] >= 3 ? 1 : 0;
    case FamilyKind::DoubleBroom:
      return p[2];
    case FamilyKind::Broom:
    case FamilyKind::Spider:
    case FamilyKind::BalancedSpider:
      // Every tree vertex is a pendant or a cut vertex.
      return vertex_count(spec) == 1 ? 0 : vertex_count(spec) - pendant_count_of(spec);
    case FamilyKind::UnicyclicPendant:
      return p[0] > p[1] ? 1 : 0;
    case FamilyKind::UnicyclicTail:
      return p[0] - p[1];
    case FamilyKind::Dumbbell:
      return p[2] == p[0] + p[1] - 1 ? 1 : p[2] - p[0] - p[1] + 2;
    case FamilyKind::Kite:
      return p[1] >= 1 ? 1 : 0;
    case FamilyKind::Octopus:
      return p[0] == 2 ? std::max(p[1] - 2, 0) : p[1] - p[0];
  }
  return 0;
}

}  // namespace wiener
