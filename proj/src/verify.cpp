#include "wiener/verify.hpp"

#include <algorithm>
#include <array>

#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/formulas.hpp"

namespace wiener {

namespace {

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr std::array<TheoremName, 9> kNames{{
    {TheoremId::MaxPendantI, "max_pendant_i"},
    {TheoremId::MaxPendantII, "max_pendant_ii"},
    {TheoremId::MaxPendantIII, "max_pendant_iii"},
    {TheoremId::MinPendantI, "min_pendant_i"},
    {TheoremId::MinPendantII, "min_pendant_ii"},
    {TheoremId::MinTree, "min_tree"},
    {TheoremId::MinCut, "min_cut"},
    {TheoremId::TreeCutMax, "tree_cut_max"},
    {TheoremId::TreeCutMin, "tree_cut_min"},
}};

constexpr std::array<TheoremId, 9> kAll{
    TheoremId::MaxPendantI, TheoremId::MaxPendantII, TheoremId::MaxPendantIII,
    TheoremId::MinPendantI, TheoremId::MinPendantII, TheoremId::MinTree,
    TheoremId::MinCut,      TheoremId::TreeCutMax,   TheoremId::TreeCutMin,
};

int need(const std::optional<int>& value, TheoremId id, const char* which) {
  if (!value) {
    throw std::invalid_argument(std::string(to_string(id)) + " needs " + which);
  }
  return *value;
}

void in_range(bool ok, TheoremId id, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(std::string(to_string(id)) + ": " + what);
  }
}

struct Prediction {
  SearchConstraint constraint;
  Objective objective = Objective::Min;
  std::int64_t value = 0;
  std::vector<FamilySpec> families;
};

Prediction predict(TheoremId id, const TheoremParams& p) {
  const int n = p.n;
  Prediction out;
  out.constraint.n = n;
  switch (id) {
    case TheoremId::MaxPendantI: {
      const int k = need(p.k, id, "a pendant count k");
      in_range(k >= 2 && k <= n - 2, id, "needs 2 <= k <= n-2");
      out.constraint.pendant_k = k;
      out.objective = Objective::Max;
      out.value = formulas::w_max_pendant(n, k);
      out.families = {FamilySpec::double_broom(k / 2, (k + 1) / 2, n - k)};
      break;
    }
    case TheoremId::MaxPendantII:
      in_range(n >= 4, id, "needs n >= 4");
      out.constraint.pendant_k = 1;
      out.objective = Objective::Max;
      out.value = formulas::w_unicyclic_tail(n, 3);
      out.families = {FamilySpec::unicyclic_tail(n, 3)};
      break;
    case TheoremId::MaxPendantIII:
      in_range(n >= 3, id, "needs n >= 3");
      out.constraint.pendant_k = 0;
      out.objective = Objective::Max;
      if (n >= 7) {
        out.value = formulas::w_dumbbell_33(n);
        out.families = {FamilySpec::dumbbell(3, 3, n)};
      } else if (n == 6) {
        out.value = formulas::w_dumbbell_33(6);
        out.families = {FamilySpec::cycle(6), FamilySpec::dumbbell(3, 3, 6)};
      } else {
        out.value = formulas::w_cycle(n);
        out.families = {FamilySpec::cycle(n)};
      }
      break;
    case TheoremId::MinPendantI: {
      const int k = need(p.k, id, "a pendant count k");
      in_range(n >= 4 && k >= 0 && k <= n - 3, id, "needs n >= 4 and 0 <= k <= n-3");
      out.constraint.pendant_k = k;
      out.value = formulas::w_kite(n, k);
      out.families = {FamilySpec::kite(n, k)};
      break;
    }
    case TheoremId::MinPendantII:
      in_range(n >= 4, id, "needs n >= 4");
      out.constraint.pendant_k = n - 2;
      out.value = formulas::w_t1(n);
      out.families = {FamilySpec::double_broom(1, n - 3, 2)};
      break;
    case TheoremId::MinTree: {
      const int k = need(p.k, id, "a pendant count k");
      in_range(k >= 2 && k <= n - 2, id, "needs 2 <= k <= n-2");
      out.constraint.graph_class = GraphClass::Trees;
      out.constraint.pendant_k = k;
      out.value = formulas::w_balanced_spider(n, k);
      out.families = {FamilySpec::balanced_spider(n, k)};
      break;
    }
    case TheoremId::MinCut: {
      const int s = need(p.s, id, "a cut-vertex count s");
      in_range(s >= 0 && s <= n - 3, id, "needs 0 <= s <= n-3");
      out.constraint.cut_s = s;
      FamilySpec octopus = FamilySpec::balanced_octopus(n, n - s);
      out.value = wiener(build(octopus));
      out.families = {octopus};
      break;
    }
    case TheoremId::TreeCutMax: {
      const int s = need(p.s, id, "a cut-vertex count s");
      in_range(s >= 1 && s <= n - 2, id, "needs 1 <= s <= n-2");
      const int k = n - s;
      out.constraint.graph_class = GraphClass::Trees;
      out.constraint.cut_s = s;
      out.objective = Objective::Max;
      out.value = formulas::w_double_broom(k / 2, (k + 1) / 2, s);
      out.families = {FamilySpec::double_broom(k / 2, (k + 1) / 2, s)};
      break;
    }
    case TheoremId::TreeCutMin: {
      const int s = need(p.s, id, "a cut-vertex count s");
      in_range(s >= 2 && s <= n - 2, id, "needs 2 <= s <= n-2");
      out.constraint.graph_class = GraphClass::Trees;
      out.constraint.cut_s = s;
      out.value = formulas::w_balanced_spider(n, n - s);
      out.families = {FamilySpec::balanced_spider(n, n - s)};
      break;
    }
  }
  return out;
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kAll; }

std::string_view to_string(TheoremId id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
  for (const auto& entry : kNames) {
    if (entry.name == text) return entry.id;
  }
  return std::nullopt;
}

TheoremVerdict verify_theorem(TheoremId id, const TheoremParams& params,
                              const SearchOptions& options) {
  Prediction prediction = predict(id, params);
  validate(prediction.constraint);

  TheoremVerdict verdict;
  verdict.theorem = id;
  verdict.params = params;
  verdict.predicted_value = prediction.value;
  verdict.predicted_families = prediction.families;
  verdict.observed = extremal_search(prediction.constraint, prediction.objective, options);

  const SearchReport& seen = verdict.observed;
  verdict.value_match = seen.extremal_value && *seen.extremal_value == prediction.value;
  verdict.unique = seen.witness_classes == 1;

  std::vector<CanonicalForm> predicted;
  for (const FamilySpec& f : prediction.families) {
    predicted.push_back(canonical_form(build(f)));
  }
  std::sort(predicted.begin(), predicted.end());
  std::vector<CanonicalForm> observed;
  for (const Graph& w : seen.witnesses) {
    observed.push_back(canonical_form(w));
  }
  if (id == TheoremId::MinCut) {
    verdict.witness_match =
        std::find(observed.begin(), observed.end(), predicted.front()) != observed.end();
  } else {
    verdict.witness_match =
        seen.witness_classes == observed.size() && observed == predicted;
  }
  return verdict;
}

AuditRecord minimizer_structure_audit(const SearchReport& report) {
  if (report.objective != Objective::Min || !report.constraint.cut_s) {
    throw std::invalid_argument(
        "structure audit applies to minimum searches under a cut-vertex constraint");
  }
  const int s = *report.constraint.cut_s;
  AuditRecord record;
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    const Graph& g = report.witnesses[i];
    const BlockDecomposition blocks = block_decomposition(g);
    ++record.audited;
    for (int b = 0; b < static_cast<int>(blocks.blocks.size()); ++b) {
      if (!blocks.is_complete_block(g, b)) {
        record.violations.push_back({i, "block " + std::to_string(b) + " is not complete"});
      }
      if (s >= 2 && blocks.is_pendant_block(b) &&
          set_size(blocks.blocks[static_cast<std::size_t>(b)]) != 2) {
        record.violations.push_back({i, "pendant block " + std::to_string(b) + " is not K_2"});
      }
    }
    for (Vertex c : members(blocks.cut_vertices)) {
      if (blocks.blocks_containing(c).size() != 2) {
        record.violations.push_back(
            {i, "cut vertex " + std::to_string(c) + " lies in more than two blocks"});
      }
    }
  }
  if (report.witness_classes > report.witnesses.size()) {
    record.violations.push_back(
        {report.witnesses.size(), "witness classes beyond the stored cap were not audited"});
  }
  return record;
}

}  // namespace wiener
