#include "wiener/formulas.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace wiener::formulas {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw FormulaDomainError("formula value overflows 64-bit integers");
  }
  return static_cast<std::int64_t>(value);
}

Wide exact(Wide num, Wide den) {
  if (num % den != 0) {
    throw std::logic_error("non-integral intermediate in closed form");
  }
  return num / den;
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw FormulaDomainError(what);
  }
}

// Magnitude guard so that cubic and quartic terms stay inside 128 bits.
void bounded(std::initializer_list<std::int64_t> values) {
  for (auto v : values) {
    require(v <= 1'000'000 && v >= -1'000'000, "parameter magnitude above 10^6");
  }
}

Wide choose(Wide n, Wide k) {
  if (k < 0 || n < k) return 0;
  Wide out = 1;
  for (Wide i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

Wide cycle_w(Wide n) { return n % 2 == 0 ? exact(n * n * n, 8) : exact(n * (n * n - 1), 8); }
Wide cycle_d(Wide n) { return n % 2 == 0 ? exact(n * n, 4) : exact(n * n - 1, 4); }
Wide spider_d(Wide l, Wide q) { return exact(l * q * (q + 1), 2); }
Wide spider_w(Wide l, Wide q) { return l * choose(q + 2, 3) + exact(q * q * l * (q + 1) * (l - 1), 2); }

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  bounded({n, k});
  return narrow(choose(n, k));
}

std::int64_t w_cycle(std::int64_t n) {
  bounded({n});
  require(n >= 3, "w_cycle needs n >= 3");
  return narrow(cycle_w(n));
}

std::int64_t d_cycle_vertex(std::int64_t n) {
  bounded({n});
  require(n >= 3, "d_cycle_vertex needs n >= 3");
  return narrow(cycle_d(n));
}

std::int64_t d_path_vertex(std::int64_t n, std::int64_t i) {
  bounded({n, i});
  require(i >= 1 && i <= n, "d_path_vertex needs 1 <= i <= n");
  Wide a = n - i;
  Wide b = i;
  return narrow(exact(a * (a + 1) + b * (b - 1), 2));
}

std::int64_t w_unicyclic_pendant(std::int64_t n, std::int64_t g) {
  bounded({n, g});
  require(g >= 3 && g <= n, "w_unicyclic_pendant needs 3 <= g <= n");
  Wide G = g;
  Wide tail = n - g;
  if (g % 2 == 0) {
    // g^3/8 + (n-g)(g^2/4 + n - 1)
    return narrow(exact(G * G * G, 8) + tail * exact(G * G + 4 * (n - 1), 4));
  }
  return narrow(exact(G * (G * G - 1), 8) + tail * exact(G * G - 1 + 4 * (n - 1), 4));
}

std::int64_t w_unicyclic_tail(std::int64_t n, std::int64_t g) {
  bounded({n, g});
  require(g >= 3 && g <= n, "w_unicyclic_tail needs 3 <= g <= n");
  Wide N = n;
  Wide G = g;
  Wide tail = n - g;
  // (n^2+ng+3g-1)/6 - g^2/12 [- 1/4 when g is odd], over 24.
  Wide inner = 4 * (N * N + N * G + 3 * G - 1) - 2 * G * G - (g % 2 == 0 ? 0 : 6);
  return narrow(cycle_w(G) + exact(tail * inner, 24));
}

std::int64_t w_broom(std::int64_t d, std::int64_t k) {
  bounded({d, k});
  require(d >= 1 && k >= 0, "w_broom needs d >= 1, k >= 0");
  Wide D = d;
  Wide K = k;
  return narrow(choose(D + 1, 3) + K * K + (D - 1) * K + exact(D * (D - 1) * K, 2));
}

std::int64_t w_double_broom(std::int64_t l, std::int64_t k, std::int64_t d) {
  bounded({l, k, d});
  require(l >= 1 && k >= 1 && d >= 1, "w_double_broom needs l, k, d >= 1");
  Wide L = l;
  Wide K = k;
  Wide D = d;
  return narrow(choose(D + 1, 3) + L * L + K * K + exact((D * D + D - 2) * (K + L), 2) +
                (D + 1) * K * L);
}

std::int64_t d_spider_center(std::int64_t l, std::int64_t q) {
  bounded({l, q});
  require(l >= 1 && q >= 1, "d_spider_center needs l, q >= 1");
  return narrow(spider_d(l, q));
}

std::int64_t w_spider(std::int64_t l, std::int64_t q) {
  bounded({l, q});
  require(l >= 1 && q >= 1, "w_spider needs l, q >= 1");
  return narrow(spider_w(l, q));
}

std::int64_t w_balanced_spider(std::int64_t n, std::int64_t k) {
  bounded({n, k});
  require(k >= 2 && k <= n - 2, "w_balanced_spider needs 2 <= k <= n-2");
  const Wide q = (n - 1) / k;
  const Wide r = n - 1 - k * q;
  if (r == 0) {
    return narrow(spider_w(k, q));
  }
  // Long legs T_r^{q+1} and short legs T_{k-r}^q share the centre.
  const Wide s = k - r;
  return narrow(spider_w(r, q + 1) + spider_w(s, q) + r * (q + 1) * spider_d(s, q) +
                s * q * spider_d(r, q + 1));
}

std::int64_t w_dumbbell_33(std::int64_t n) {
  bounded({n});
  require(n >= 6, "w_dumbbell_33 needs n >= 6");
  Wide N = n;
  return narrow(exact(N * N * N - 13 * N + 24, 6));
}

std::int64_t w_max_pendant(std::int64_t n, std::int64_t k) {
  bounded({n, k});
  require(k >= 2 && k <= n - 2, "w_max_pendant needs 2 <= k <= n-2");
  const Wide d = n - k;
  const Wide K = k;
  const Wide spine = choose(d + 1, 3);
  const Wide cross = exact(K * (d * d + d - 2), 2);
  if (k % 2 == 0) {
    return narrow(spine + exact(K * K * (d + 3), 4) + cross);
  }
  return narrow(spine + exact((K * K - 1) * (d + 3), 4) + cross + 1);
}

std::int64_t w_kite(std::int64_t n, std::int64_t k) {
  bounded({n, k});
  require(n >= 4 && k >= 0 && k <= n - 3, "w_kite needs n >= 4 and 0 <= k <= n-3");
  Wide K = k;
  return narrow(choose(n - k, 2) + K * K + 2 * K * (n - k - 1));
}

std::int64_t w_t1(std::int64_t n) {
  bounded({n});
  require(n >= 4, "w_t1 needs n >= 4");
  Wide N = n;
  return narrow(N * N - N - 2);
}

std::int64_t wiener_via_cut(std::int64_t w1, std::int64_t w2, std::int64_t n1, std::int64_t n2,
                            std::int64_t d1_u, std::int64_t d2_u) {
  require(n1 >= 1 && n2 >= 1, "wiener_via_cut needs both parts to have >= 1 vertex");
  require(w1 >= 0 && w2 >= 0 && d1_u >= 0 && d2_u >= 0,
          "wiener_via_cut needs non-negative Wiener indices and transmissions");
  return narrow(Wide{w1} + w2 + Wide{n1 - 1} * d2_u + Wide{n2 - 1} * d1_u);
}

namespace {

constexpr std::array<FormulaInfo, 15> kCatalog{{
    {"w_cycle", "n", 1},
    {"d_cycle_vertex", "n", 1},
    {"d_path_vertex", "n i", 2},
    {"w_unicyclic_pendant", "n g", 2},
    {"w_unicyclic_tail", "n g", 2},
    {"w_broom", "d k", 2},
    {"w_double_broom", "l k d", 3},
    {"d_spider_center", "l q", 2},
    {"w_spider", "l q", 2},
    {"w_balanced_spider", "n k", 2},
    {"w_dumbbell_33", "n", 1},
    {"w_max_pendant", "n k", 2},
    {"w_kite", "n k", 2},
    {"w_t1", "n", 1},
    {"wiener_via_cut", "w1 w2 n1 n2 d1_u d2_u", 6},
}};

}  // namespace

std::span<const FormulaInfo> catalog() { return kCatalog; }

std::int64_t evaluate(std::string_view name, std::span<const std::int64_t> a) {
  auto hit = std::find_if(kCatalog.begin(), kCatalog.end(),
                          [&](const FormulaInfo& f) { return f.name == name; });
  if (hit == kCatalog.end()) {
    throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
  }
  if (a.size() != hit->arity) {
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(hit->arity) +
                                " argument(s): " + std::string(hit->params));
  }
  if (name == "w_cycle") return w_cycle(a[0]);
  if (name == "d_cycle_vertex") return d_cycle_vertex(a[0]);
  if (name == "d_path_vertex") return d_path_vertex(a[0], a[1]);
  if (name == "w_unicyclic_pendant") return w_unicyclic_pendant(a[0], a[1]);
  if (name == "w_unicyclic_tail") return w_unicyclic_tail(a[0], a[1]);
  if (name == "w_broom") return w_broom(a[0], a[1]);
  if (name == "w_double_broom") return w_double_broom(a[0], a[1], a[2]);
  if (name == "d_spider_center") return d_spider_center(a[0], a[1]);
  if (name == "w_spider") return w_spider(a[0], a[1]);
  if (name == "w_balanced_spider") return w_balanced_spider(a[0], a[1]);
  if (name == "w_dumbbell_33") return w_dumbbell_33(a[0]);
  if (name == "w_max_pendant") return w_max_pendant(a[0], a[1]);
  if (name == "w_kite") return w_kite(a[0], a[1]);
  if (name == "w_t1") return w_t1(a[0]);
  return wiener_via_cut(a[0], a[1], a[2], a[3], a[4], a[5]);
}

}  // namespace wiener::formulas
