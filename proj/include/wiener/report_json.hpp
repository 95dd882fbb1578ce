#pragma once

#include <string>

#include "wiener/search.hpp"
#include "wiener/verify.hpp"

namespace wiener {

/// {"constraint":{"n","class","pendant_k","cut_s"},"objective",
///  "extremal_value","witnesses":[graph6...],"witness_classes","scanned",
///  "matching","elapsed_ms"}; absent counts and empty extrema are null.
std::string to_json(const SearchReport& report, int indent = 2);

/// Theorem verdict: the prediction, the embedded search report and the
/// match flags.
std::string to_json(const TheoremVerdict& verdict, int indent = 2);

std::string to_json(const AuditRecord& audit, int indent = 2);

}  // namespace wiener
