#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>

#include "oracles.hpp"
#include "wiener/canonical.hpp"
#include "wiener/families.hpp"

using namespace wiener;

namespace {

/// Every valid spec with at most max_n vertices.
std::vector<FamilySpec> grid(int max_n) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(FamilySpec::path(n));
    out.push_back(FamilySpec::complete(n));
    if (n >= 2) out.push_back(FamilySpec::star(n));
    if (n >= 3) out.push_back(FamilySpec::cycle(n));
    for (int k = 2; k <= n - 2; ++k) out.push_back(FamilySpec::balanced_spider(n, k));
    for (int g = 3; g <= n; ++g) {
      out.push_back(FamilySpec::unicyclic_pendant(n, g));
      if (g < n) out.push_back(FamilySpec::unicyclic_tail(n, g));
    }
    if (n >= 4) {
      for (int k = 0; k <= n - 3; ++k) out.push_back(FamilySpec::kite(n, k));
    }
    for (int m1 = 3; m1 <= n; ++m1) {
      for (int m2 = 3; m1 + m2 - 1 <= n; ++m2) out.push_back(FamilySpec::dumbbell(m1, m2, n));
    }
    // Octopus: every non-increasing leg vector of length m >= 2 summing to n.
    std::vector<int> legs;
    std::function<void(int, int)> partitions = [&](int left, int cap) {
      if (left == 0) {
        if (legs.size() >= 2) out.push_back(FamilySpec::octopus(n, legs));
        return;
      }
      for (int l = std::min(left, cap); l >= 1; --l) {
        legs.push_back(l);
        partitions(left - l, l);
        legs.pop_back();
      }
    };
    partitions(n, n);
  }
  for (int d = 1; d <= max_n; ++d) {
    for (int k = 0; d + k <= max_n; ++k) out.push_back(FamilySpec::broom(d, k));
    for (int k = 1; d + k < max_n; ++k) {
      for (int l = 1; d + k + l <= max_n; ++l) out.push_back(FamilySpec::double_broom(k, l, d));
    }
  }
  for (int l = 1; l < max_n; ++l) {
    for (int q = 1; l * q + 1 <= max_n; ++q) out.push_back(FamilySpec::spider(l, q));
  }
  return out;
}

int degree_count(const Graph& g, int degree) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == degree ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("spec examples") {
  for (int d = 1; d <= 6; ++d) {
    CHECK(are_isomorphic(build(FamilySpec::double_broom(1, 1, d)), build(FamilySpec::path(d + 2))));
  }
  for (int q = 1; q <= 6; ++q) {
    CHECK(are_isomorphic(build(FamilySpec::spider(1, q)), build(FamilySpec::path(q + 1))));
  }
  const Graph shared = build(FamilySpec::dumbbell(3, 3, 5));
  CHECK(shared.order() == 5);
  CHECK(set_size(pendant_vertices(shared)) == 0);
  CHECK(set_size(cut_vertices(shared)) == 1);
  const Graph bridged = build(FamilySpec::dumbbell(3, 3, 6));
  CHECK(set_size(cut_vertices(bridged)) == 2);
  CHECK(wiener::wiener(build(FamilySpec::octopus(4, {2, 1, 1}))) == 8);

  CHECK(pendant_count_of(FamilySpec::double_broom(2, 3, 4)) == 5);
  CHECK(pendant_count_of(FamilySpec::unicyclic_tail(7, 3)) == 1);
  CHECK(pendant_count_of(FamilySpec::kite(7, 2)) == 2);
  for (int n = 4; n <= 9; ++n) {
    for (int s = 0; s <= n - 3; ++s) {
      std::vector<int> legs(n - s, 1);
      legs.front() = s + 1;
      CHECK(cut_count_of(FamilySpec::octopus(n, legs)) == s);
    }
    CHECK(cut_count_of(FamilySpec::complete(n)) == 0);
    CHECK(cut_count_of(FamilySpec::path(n)) == n - 2);
  }
}

TEST_CASE("grid: connected, sized, and counts match the oracles") {
  const std::vector<FamilySpec> specs = grid(12);
  CHECK(specs.size() > 500);
  for (const FamilySpec& spec : specs) {
    CAPTURE(to_string(spec));
    const Graph g = build(spec);
    CHECK(g.order() == vertex_count(spec));
    CHECK(oracle::connected(g));
    CHECK(static_cast<int>(oracle::pendant_vertices(g).size()) == pendant_count_of(spec));
    CHECK(static_cast<int>(oracle::cut_vertices(g).size()) == cut_count_of(spec));
    CHECK(parse_family(to_string(spec)) == spec);
  }
}

TEST_CASE("structural properties") {
  for (int n = 5; n <= 12; ++n) {
    for (int m1 = 3; m1 <= n; ++m1) {
      for (int m2 = 3; m1 + m2 - 1 <= n; ++m2) {
        const Graph g = build(FamilySpec::dumbbell(m1, m2, n));
        if (n == m1 + m2 - 1) {
          CHECK(degree_count(g, 4) == 1);
        } else {
          const std::vector<int> degrees = g.degree_sequence();
          CHECK(*std::max_element(degrees.begin(), degrees.end()) == 3);
        }
      }
    }
    for (int k = 2; k <= n - 2; ++k) {
      const std::vector<int> legs = balanced_spider_legs(n, k);
      const int q = (n - 1) / k;
      const int r = n - 1 - k * q;
      REQUIRE(static_cast<int>(legs.size()) == k);
      CHECK(std::count(legs.begin(), legs.end(), q + 1) == r);
      CHECK(std::count(legs.begin(), legs.end(), q) == k - r);
      // Centre 0 has degree k; the legs are the components around it.
      CHECK(build(FamilySpec::balanced_spider(n, k)).degree(0) == k);
    }
  }
  SUBCASE("octopus legs are order-insensitive") {
    const std::vector<std::vector<int>> orders{{3, 2, 1, 1}, {1, 3, 1, 2}, {1, 1, 2, 3}, {2, 1, 3, 1}};
    const Graph reference = build(FamilySpec::octopus(7, orders.front()));
    for (const auto& legs : orders) {
      CHECK(are_isomorphic(build(FamilySpec::octopus(7, legs)), reference));
    }
  }
  SUBCASE("balanced octopus legs differ by at most one") {
    for (int n = 3; n <= 12; ++n) {
      for (int m = 2; m <= n; ++m) {
        const FamilySpec o = FamilySpec::balanced_octopus(n, m);
        const auto legs = std::vector<int>(o.params.begin() + 2, o.params.end());
        CHECK(*std::max_element(legs.begin(), legs.end()) -
                  *std::min_element(legs.begin(), legs.end()) <= 1);
        CHECK(vertex_count(o) == n);
      }
    }
  }
}

TEST_CASE("labelling conventions") {
  // T(2,3,4): spine 0..3, two leaves at 0, three at 3.
  const Graph t = build(FamilySpec::double_broom(2, 3, 4));
  for (Vertex v = 0; v + 1 < 4; ++v) CHECK(t.has_edge(v, v + 1));
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(3) == 4);
  // U_l(7,3): triangle 0,1,2 and the tail hangs from 0.
  const Graph u = build(FamilySpec::unicyclic_tail(7, 3));
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(1, 2));
  CHECK(u.has_edge(0, 2));
  CHECK(u.degree(0) == 3);
  // Kite: clique 0..n-k-1, pendants at 0.
  const Graph kite = build(FamilySpec::kite(7, 2));
  CHECK(kite.degree(0) == 6);
  CHECK(kite.degree(5) == 1);
  CHECK(kite.degree(6) == 1);
}

TEST_CASE("text syntax") {
  CHECK(to_string(parse_family("T(2,3,4)")) == "T(2,3,4)");
  CHECK(parse_family("u_L(7,3)") == FamilySpec::unicyclic_tail(7, 3));
  CHECK(parse_family("U_p(7,3)") == FamilySpec::unicyclic_pendant(7, 3));
  CHECK(parse_family(" C( 3 , 3 ; 7 ) ") == FamilySpec::dumbbell(3, 3, 7));
  CHECK(parse_family("pk(7,2)") == FamilySpec::kite(7, 2));
  CHECK(parse_family("K(3;7:2,2,3)") == FamilySpec::octopus(7, {2, 2, 3}));
  CHECK(parse_family("SPIDER(3,2)") == FamilySpec::spider(3, 2));
  CHECK(parse_family("Tnk(8,3)") == FamilySpec::balanced_spider(8, 3));
  CHECK(parse_family("P(5)") == FamilySpec::path(5));
  CHECK(parse_family("C(5)") == FamilySpec::cycle(5));
  CHECK(parse_family("K(5)") == FamilySpec::complete(5));
  CHECK(parse_family("Star(5)") == FamilySpec::star(5));
  CHECK(parse_family("S(3,2)") == FamilySpec::broom(3, 2));

  for (const char* bad : {"", "T(1,2)", "Q(3)", "T(1,2,3", "C(3,3;)", "K(3;7:2,2)", "P(x)", "T(0,1,1)",
                          "U_l(3,3)", "C(3,3;4)", "Pk(5,3)", "Tnk(5,1)", "K(3;7:2,2,4)", "P(0)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_family(bad), FamilyParameterError);
  }
}

TEST_CASE("invalid parameters have kind-specific diagnostics") {
  std::vector<std::string> messages;
  for (const FamilySpec& bad :
       {FamilySpec::double_broom(0, 1, 1), FamilySpec::broom(0, 1), FamilySpec::spider(0, 1),
        FamilySpec::balanced_spider(5, 1), FamilySpec::unicyclic_pendant(5, 2),
        FamilySpec::unicyclic_tail(5, 5), FamilySpec::dumbbell(3, 3, 4), FamilySpec::kite(5, 3),
        FamilySpec{FamilyKind::Octopus, {2, 5, 2, 2}}}) {
    try {
      validate(bad);
      FAIL("accepted " << to_string(bad));
    } catch (const FamilyParameterError& e) {
      messages.emplace_back(e.what());
    }
  }
  std::sort(messages.begin(), messages.end());
  CHECK(std::adjacent_find(messages.begin(), messages.end()) == messages.end());
}
