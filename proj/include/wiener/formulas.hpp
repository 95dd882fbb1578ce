#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

namespace wiener::formulas {

/// Parameters outside a formula's domain.
class FormulaDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Closed forms for Wiener indices (w_*) and vertex transmissions (d_*).
// All arithmetic is exact; intermediate fractions are carried over a common
// denominator and every division is checked to be exact.

std::int64_t binomial(std::int64_t n, std::int64_t k);

std::int64_t w_cycle(std::int64_t n);
std::int64_t d_cycle_vertex(std::int64_t n);
/// Transmission of the i-th vertex (1-based) of P_n.
std::int64_t d_path_vertex(std::int64_t n, std::int64_t i);
/// Cycle C_g with n-g pendants at one vertex.
std::int64_t w_unicyclic_pendant(std::int64_t n, std::int64_t g);
/// Cycle C_g with a path of n-g vertices hanging from one vertex.
std::int64_t w_unicyclic_tail(std::int64_t n, std::int64_t g);
std::int64_t w_broom(std::int64_t d, std::int64_t k);
std::int64_t w_double_broom(std::int64_t l, std::int64_t k, std::int64_t d);
std::int64_t d_spider_center(std::int64_t l, std::int64_t q);
std::int64_t w_spider(std::int64_t l, std::int64_t q);
/// Balanced spider T_{n,k}, composed from two uniform spiders glued at the centre.
std::int64_t w_balanced_spider(std::int64_t n, std::int64_t k);
std::int64_t w_dumbbell_33(std::int64_t n);
/// Maximum over connected graphs with n vertices and k pendants (the double broom).
std::int64_t w_max_pendant(std::int64_t n, std::int64_t k);
/// K_{n-k} with k pendants at one clique vertex.
std::int64_t w_kite(std::int64_t n, std::int64_t k);
/// The double broom T(1, n-3, 2).
std::int64_t w_t1(std::int64_t n);

/// Wiener index of a graph split at cut vertex u into parts with n1 and n2
/// vertices, Wiener indices w1, w2 and transmissions d1_u, d2_u at u.
std::int64_t wiener_via_cut(std::int64_t w1, std::int64_t w2, std::int64_t n1, std::int64_t n2,
                            std::int64_t d1_u, std::int64_t d2_u);

struct FormulaInfo {
  std::string_view name;
  std::string_view params;  // e.g. "n g"
  std::size_t arity;
};

std::span<const FormulaInfo> catalog();

/// Dispatch by name, e.g. evaluate("w_dumbbell_33", {7}) == 46.
/// Throws std::invalid_argument for unknown names or a wrong argument count.
std::int64_t evaluate(std::string_view name, std::span<const std::int64_t> args);

}  // namespace wiener::formulas
