#include <functional>

#include "wiener/families.hpp"
#include "wiener/fixtures.hpp"
#include "wiener/formulas.hpp"

namespace wiener {

namespace {

class Grid {
 public:
  explicit Grid(GridCheck& out) : out_(out) {}

  void expect(const std::string& label, std::int64_t formula, std::int64_t direct) {
    ++out_.checked;
    if (formula != direct) {
      out_.mismatches.push_back(label + ": formula " + std::to_string(formula) + ", direct " +
                                std::to_string(direct));
    }
  }

  void expect_w(const std::string& label, std::int64_t formula, const FamilySpec& spec) {
    expect(label + " on " + to_string(spec), formula, wiener(build(spec)));
  }

 private:
  GridCheck& out_;
};

std::string call(const char* name, std::initializer_list<int> args) {
  std::string text = std::string(name) + "(";
  bool first = true;
  for (int a : args) {
    text += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return text + ")";
}

}  // namespace

GridCheck formula_grid(int max_n) {
  namespace f = formulas;
  GridCheck out;
  Grid grid(out);

  for (int n = 3; n <= max_n; ++n) {
    const Graph cycle = build(FamilySpec::cycle(n));
    grid.expect_w(call("w_cycle", {n}), f::w_cycle(n), FamilySpec::cycle(n));
    grid.expect(call("d_cycle_vertex", {n}), f::d_cycle_vertex(n), transmission(cycle, 0));
  }
  for (int n = 1; n <= max_n; ++n) {
    const Graph path = build(FamilySpec::path(n));
    for (int i = 1; i <= n; ++i) {
      grid.expect(call("d_path_vertex", {n, i}), f::d_path_vertex(n, i), transmission(path, i - 1));
    }
  }
  for (int n = 3; n <= max_n; ++n) {
    for (int g = 3; g <= n; ++g) {
      grid.expect_w(call("w_unicyclic_pendant", {n, g}), f::w_unicyclic_pendant(n, g),
                    FamilySpec::unicyclic_pendant(n, g));
      if (g < n) {
        grid.expect_w(call("w_unicyclic_tail", {n, g}), f::w_unicyclic_tail(n, g),
                      FamilySpec::unicyclic_tail(n, g));
      }
    }
  }
  for (int d = 1; d <= max_n; ++d) {
    for (int k = 0; d + k <= max_n; ++k) {
      grid.expect_w(call("w_broom", {d, k}), f::w_broom(d, k), FamilySpec::broom(d, k));
    }
  }
  for (int d = 1; d <= max_n; ++d) {
    for (int k = 1; d + k < max_n; ++k) {
      for (int l = 1; d + k + l <= max_n; ++l) {
        grid.expect_w(call("w_double_broom", {l, k, d}), f::w_double_broom(l, k, d),
                      FamilySpec::double_broom(k, l, d));
      }
    }
  }
  for (int l = 1; l < max_n; ++l) {
    for (int q = 1; l * q + 1 <= max_n; ++q) {
      const FamilySpec spider = FamilySpec::spider(l, q);
      grid.expect_w(call("w_spider", {l, q}), f::w_spider(l, q), spider);
      grid.expect(call("d_spider_center", {l, q}), f::d_spider_center(l, q),
                  transmission(build(spider), 0));
    }
  }
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      grid.expect_w(call("w_balanced_spider", {n, k}), f::w_balanced_spider(n, k),
                    FamilySpec::balanced_spider(n, k));
      grid.expect_w(call("w_max_pendant", {n, k}), f::w_max_pendant(n, k),
                    FamilySpec::double_broom(k / 2, (k + 1) / 2, n - k));
    }
    for (int k = 0; k <= n - 3; ++k) {
      grid.expect_w(call("w_kite", {n, k}), f::w_kite(n, k), FamilySpec::kite(n, k));
    }
    grid.expect_w(call("w_t1", {n}), f::w_t1(n), FamilySpec::double_broom(1, n - 3, 2));
  }
  for (int n = 6; n <= max_n; ++n) {
    grid.expect_w(call("w_dumbbell_33", {n}), f::w_dumbbell_33(n), FamilySpec::dumbbell(3, 3, n));
  }
  return out;
}

}  // namespace wiener
