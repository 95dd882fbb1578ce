#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiener {

/// How the "after" quantity of a fixture must compare with the "before" one.
enum class Relation { Less, Greater, GreaterOrEqual, Equal };

std::string_view to_string(Relation r);
bool relation_holds(Relation r, std::int64_t after, std::int64_t before);

/// One worked instance of a monotonicity lemma: two quantities (usually
/// Wiener indices) before and after a surgery, and the relation the lemma
/// guarantees between them.
struct LemmaFixture {
  std::string id;
  std::string description;
  std::string quantity;  // "W" or "D" (transmission)
  std::int64_t before = 0;
  std::int64_t after = 0;
  Relation expected = Relation::Less;

  bool holds() const { return relation_holds(expected, after, before); }
};

std::span<const std::string_view> lemma_ids();

/// Builds and evaluates the fixture; nullopt for an unknown id.
std::optional<LemmaFixture> run_lemma_fixture(std::string_view id);

struct GridCheck {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Every closed form against the direct Wiener index (or transmission) of
/// the built family, over the full valid parameter grid with n <= max_n.
GridCheck formula_grid(int max_n = 14);

}  // namespace wiener
