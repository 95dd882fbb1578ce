#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/families.hpp"
#include "wiener/search.hpp"

namespace wiener {

enum class TheoremId {
  MaxPendantI,    // max over k pendants, 2 <= k <= n-2: balanced double broom
  MaxPendantII,   // max over one pendant: U_{n,3}^l
  MaxPendantIII,  // max over no pendants: C_{3,3}^n (cycle for n <= 6)
  MinPendantI,    // min over k pendants, k <= n-3: kite P_n^k
  MinPendantII,   // min over n-2 pendants: T(1,n-3,2)
  MinTree,        // min over trees with k pendants: balanced spider T_{n,k}
  MinCut,         // min over s cut vertices: balanced octopus K_{n-s}^n
  TreeCutMax,     // max over trees with s cut vertices
  TreeCutMin,     // min over trees with s cut vertices
};

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view text);

struct TheoremParams {
  int n = 0;
  std::optional<int> k;  // pendant count, where the theorem takes one
  std::optional<int> s;  // cut-vertex count, where the theorem takes one
};

struct TheoremVerdict {
  TheoremId theorem = TheoremId::MaxPendantI;
  TheoremParams params;
  std::int64_t predicted_value = 0;
  /// Classes predicted to attain the extremum; more than one only for the
  /// n = 6 tie between C_6 and C_{3,3}^6.
  std::vector<FamilySpec> predicted_families;
  SearchReport observed;
  bool value_match = false;
  /// Observed classes equal the predicted set; for MinCut, which claims no
  /// uniqueness, the predicted class is among the observed ones.
  bool witness_match = false;
  bool unique = false;

  bool passed() const { return value_match && witness_match; }
};

/// Runs the matching exhaustive search and compares it with the closed form
/// and the predicted family. Throws std::invalid_argument for parameters
/// outside the theorem's range and SearchRangeError for unsupported n.
TheoremVerdict verify_theorem(TheoremId id, const TheoremParams& params,
                              const SearchOptions& options = {});

struct AuditViolation {
  std::size_t witness = 0;
  std::string property;
};

struct AuditRecord {
  std::size_t audited = 0;
  std::vector<AuditViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Structure of minimizers under a cut-vertex constraint: every block is
/// complete, every cut vertex lies in exactly two blocks, and with two or
/// more cut vertices every pendant block is K_2.
AuditRecord minimizer_structure_audit(const SearchReport& report);

}  // namespace wiener
