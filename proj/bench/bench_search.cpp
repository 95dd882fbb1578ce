// Wall-clock comparison of the serial reference search and the parallel
// kernel on a few representative constraints.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "wiener/search.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  using namespace wiener;
  struct Case {
    const char* label;
    SearchConstraint constraint;
    Objective objective;
  };
  const Case cases[] = {
      {"connected n=6 k=2 min", {6, GraphClass::AllConnected, 2, std::nullopt}, Objective::Min},
      {"connected n=7 k=3 max", {7, GraphClass::AllConnected, 3, std::nullopt}, Objective::Max},
      {"connected n=7 s=2 min", {7, GraphClass::AllConnected, std::nullopt, 2}, Objective::Min},
      {"trees n=9 k=4 min", {9, GraphClass::Trees, 4, std::nullopt}, Objective::Min},
  };
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-26s %12s %12s %8s\n", "case", "serial ms", "parallel ms", "speedup");
  for (const Case& c : cases) {
    SearchReport serial;
    SearchReport parallel;
    const double ts = time_ms([&] { serial = extremal_search_serial(c.constraint, c.objective); });
    const double tp = time_ms([&] { parallel = extremal_search(c.constraint, c.objective); });
    const bool agree = serial.extremal_value == parallel.extremal_value &&
                       serial.witness_classes == parallel.witness_classes;
    std::printf("%-26s %12.1f %12.1f %8.2f%s\n", c.label, ts, tp, ts / tp, agree ? "" : "  MISMATCH");
  }
  return 0;
}
