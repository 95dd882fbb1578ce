#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "wiener/families.hpp"

namespace wiener {

namespace {

std::string join(const std::vector<int>& values, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ',';
    out += std::to_string(values.at(i));
  }
  return out;
}

struct Name {
  std::string_view text;
  FamilyKind kind;
};

// Lower-cased names; "c" and "k" are overloaded and handled separately.
constexpr Name kNames[] = {
    {"p", FamilyKind::Path},
    {"star", FamilyKind::Star},
    {"t", FamilyKind::DoubleBroom},
    {"s", FamilyKind::Broom},
    {"spider", FamilyKind::Spider},
    {"tnk", FamilyKind::BalancedSpider},
    {"u_p", FamilyKind::UnicyclicPendant},
    {"u_l", FamilyKind::UnicyclicTail},
    {"pk", FamilyKind::Kite},
};

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw FamilyParameterError("cannot parse family '" + std::string(text) + "': " + why);
}

std::vector<int> parse_ints(std::string_view whole, std::string_view list) {
  std::vector<int> out;
  if (list.empty()) {
    malformed(whole, "empty parameter list");
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = list.find(',', start);
    std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos
                                                                              : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      malformed(whole, "'" + std::string(item) + "' is not an integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) {
      return out;
    }
    start = comma + 1;
  }
}

}  // namespace

std::string to_string(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path: return "P(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Cycle: return "C(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Complete: return "K(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Star: return "Star(" + join(p, 0, p.size()) + ")";
    case FamilyKind::DoubleBroom: return "T(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Broom: return "S(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Spider: return "spider(" + join(p, 0, p.size()) + ")";
    case FamilyKind::BalancedSpider: return "Tnk(" + join(p, 0, p.size()) + ")";
    case FamilyKind::UnicyclicPendant: return "U_p(" + join(p, 0, p.size()) + ")";
    case FamilyKind::UnicyclicTail: return "U_l(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Kite: return "Pk(" + join(p, 0, p.size()) + ")";
    case FamilyKind::Dumbbell:
      if (p.size() != 3) return "C(" + join(p, 0, p.size()) + ")";
      return "C(" + join(p, 0, 2) + ";" + std::to_string(p[2]) + ")";
    case FamilyKind::Octopus:
      if (p.size() < 2) return "K(" + join(p, 0, p.size()) + ")";
      return "K(" + std::to_string(p[0]) + ";" + std::to_string(p[1]) + ":" +
             join(p, 2, p.size()) + ")";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  const auto open = compact.find('(');
  if (open == std::string::npos || open == 0 || compact.back() != ')') {
    malformed(text, "expected NAME(params)");
  }
  const std::string name = compact.substr(0, open);
  const std::string_view body =
      std::string_view(compact).substr(open + 1, compact.size() - open - 2);

  FamilySpec spec;
  if (name == "c" || name == "k") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      spec = {name == "c" ? FamilyKind::Cycle : FamilyKind::Complete, parse_ints(text, body)};
    } else if (name == "c") {
      auto cycles = parse_ints(text, body.substr(0, semi));
      auto order = parse_ints(text, body.substr(semi + 1));
      if (cycles.size() != 2 || order.size() != 1) {
        malformed(text, "dumbbell syntax is C(m1,m2;n)");
      }
      spec = FamilySpec::dumbbell(cycles[0], cycles[1], order[0]);
    } else {
      const auto colon = body.find(':', semi);
      if (colon == std::string_view::npos) {
        malformed(text, "octopus syntax is K(m;n:l1,...,lm)");
      }
      auto m = parse_ints(text, body.substr(0, semi));
      auto n = parse_ints(text, body.substr(semi + 1, colon - semi - 1));
      auto legs = parse_ints(text, body.substr(colon + 1));
      if (m.size() != 1 || n.size() != 1) {
        malformed(text, "octopus syntax is K(m;n:l1,...,lm)");
      }
      spec = {FamilyKind::Octopus, {m[0], n[0]}};
      spec.params.insert(spec.params.end(), legs.begin(), legs.end());
    }
  } else {
    auto hit = std::find_if(std::begin(kNames), std::end(kNames),
                            [&](const Name& entry) { return entry.text == name; });
    if (hit == std::end(kNames)) {
      malformed(text, "unknown family name '" + name + "'");
    }
    if (body.find_first_of(";:") != std::string_view::npos) {
      malformed(text, "unexpected separator");
    }
    spec = {hit->kind, parse_ints(text, body)};
  }
  validate(spec);
  return spec;
}

}  // namespace wiener
