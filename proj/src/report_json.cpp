#include "wiener/report_json.hpp"

#include <json.hpp>

#include "wiener/graph_io.hpp"

namespace wiener {

namespace {

using nlohmann::json;

template <typename T>
json or_null(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

json report_object(const SearchReport& report) {
  json witnesses = json::array();
  for (const Graph& g : report.witnesses) {
    witnesses.push_back(to_graph6(g));
  }
  return {
      {"constraint",
       {{"n", report.constraint.n},
        {"class", std::string(to_string(report.constraint.graph_class))},
        {"pendant_k", or_null(report.constraint.pendant_k)},
        {"cut_s", or_null(report.constraint.cut_s)}}},
      {"objective", std::string(to_string(report.objective))},
      {"extremal_value", or_null(report.extremal_value)},
      {"witnesses", std::move(witnesses)},
      {"witness_classes", report.witness_classes},
      {"scanned", report.scanned},
      {"matching", report.matching},
      {"elapsed_ms", report.elapsed_ms},
  };
}

}  // namespace

std::string to_json(const SearchReport& report, int indent) {
  return report_object(report).dump(indent);
}

std::string to_json(const TheoremVerdict& verdict, int indent) {
  json families = json::array();
  for (const FamilySpec& f : verdict.predicted_families) {
    families.push_back(to_string(f));
  }
  json out = {
      {"theorem", std::string(to_string(verdict.theorem))},
      {"params",
       {{"n", verdict.params.n}, {"k", or_null(verdict.params.k)}, {"s", or_null(verdict.params.s)}}},
      {"predicted_value", verdict.predicted_value},
      {"predicted_families", std::move(families)},
      {"observed", report_object(verdict.observed)},
      {"value_match", verdict.value_match},
      {"witness_match", verdict.witness_match},
      {"unique", verdict.unique},
      {"passed", verdict.passed()},
  };
  return out.dump(indent);
}

std::string to_json(const AuditRecord& audit, int indent) {
  json violations = json::array();
  for (const AuditViolation& v : audit.violations) {
    violations.push_back({{"witness", v.witness}, {"property", v.property}});
  }
  json out = {{"audited", audit.audited}, {"violations", std::move(violations)}, {"passed", audit.passed()}};
  return out.dump(indent);
}

}  // namespace wiener
