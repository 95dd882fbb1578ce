#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

enum class FamilyKind {
  Path,              // P(n)
  Cycle,             // C(n)
  Complete,          // K(n)
  Star,              // Star(n) = K_{1,n-1}
  DoubleBroom,       // T(k,l,d)
  Broom,             // S(d,k)
  Spider,            // spider(l,q)
  BalancedSpider,    // Tnk(n,k)
  UnicyclicPendant,  // U_p(n,g)
  UnicyclicTail,     // U_l(n,g)
  Dumbbell,          // C(m1,m2;n)
  Kite,              // Pk(n,k)
  Octopus,           // K(m;n:l1,...,lm)
};

class FamilyParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named construction with its integer parameters, in the order of the
/// text syntax. Octopus stores {m, n, l1, ..., lm}.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

  static FamilySpec path(int n) { return {FamilyKind::Path, {n}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}}; }
  static FamilySpec star(int n) { return {FamilyKind::Star, {n}}; }
  /// k pendants at one end of a d-vertex spine, l at the other.
  static FamilySpec double_broom(int k, int l, int d) { return {FamilyKind::DoubleBroom, {k, l, d}}; }
  static FamilySpec broom(int d, int k) { return {FamilyKind::Broom, {d, k}}; }
  /// l legs of q vertices each around one centre.
  static FamilySpec spider(int l, int q) { return {FamilyKind::Spider, {l, q}}; }
  static FamilySpec balanced_spider(int n, int k) { return {FamilyKind::BalancedSpider, {n, k}}; }
  static FamilySpec unicyclic_pendant(int n, int g) { return {FamilyKind::UnicyclicPendant, {n, g}}; }
  static FamilySpec unicyclic_tail(int n, int g) { return {FamilyKind::UnicyclicTail, {n, g}}; }
  static FamilySpec dumbbell(int m1, int m2, int n) { return {FamilyKind::Dumbbell, {m1, m2, n}}; }
  static FamilySpec kite(int n, int k) { return {FamilyKind::Kite, {n, k}}; }
  static FamilySpec octopus(int n, const std::vector<int>& legs);
  /// Octopus K_m^n with leg lengths as equal as possible.
  static FamilySpec balanced_octopus(int n, int m);
};

/// Throws FamilyParameterError with a kind-specific message when invalid.
void validate(const FamilySpec& spec);

int vertex_count(const FamilySpec& spec);

/// Labelling: the core (spine, cycle, clique, centre) comes first in natural
/// order, then attachments grouped by anchor in ascending anchor order.
Graph build(const FamilySpec& spec);

int pendant_count_of(const FamilySpec& spec);
int cut_count_of(const FamilySpec& spec);

/// Canonical text, e.g. "T(2,3,4)", "C(3,3;7)", "K(3;7:2,2,3)".
std::string to_string(const FamilySpec& spec);

/// Case-insensitive parse of the text syntax; throws FamilyParameterError on
/// malformed text or invalid parameters.
FamilySpec parse_family(std::string_view text);

/// Leg lengths of the balanced spider T_{n,k}: r legs of q+1 then k-r of q,
/// with q = (n-1)/k and r = n-1-kq.
std::vector<int> balanced_spider_legs(int n, int k);

}  // namespace wiener
