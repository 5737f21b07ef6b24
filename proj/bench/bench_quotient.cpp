// Times the OpenMP quotient builder against the serial reference.
//   bench_quotient [depth] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "legendrian/composite.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace legendrian;

namespace {

MountainRange range(std::string id, std::vector<Point> peaks) {
  return {std::move(id), std::move(peaks), std::nullopt, true};
}

template <class F>
double best_ms(F&& f, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int depth = argc > 1 ? std::atoi(argv[1]) : 8;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const auto A = range("A", {{0, -2}, {0, 2}});
  const auto B = range("B", {{0, -4}, {0, 0}, {0, 4}});
  const auto C = range("C", {{1, 0}});
  const std::vector<std::pair<std::string, SumSpec>> cases{
      {"B#B", SumSpec({{B, 2}})},
      {"B#B#B", SumSpec({{B, 3}})},
      {"A#B#C", SumSpec({{A, 1}, {B, 1}, {C, 1}})},
      {"A#A#B", SumSpec({{A, 2}, {B, 1}})},
  };

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "sum        depth  nodes   serial_ms  parallel_ms  speedup\n";
  for (const auto& [name, spec] : cases) {
    const int floor = spec.top_tb() - depth;
    std::size_t nodes = 0;
    const double ser = best_ms([&] { nodes = build_quotient_serial(spec, floor).nodes().size(); },
                               repeats);
    const double par = best_ms([&] { build_quotient(spec, floor); }, repeats);
    std::printf("%-10s %5d %6zu %11.2f %12.2f %8.2f\n", name.c_str(), depth, nodes, ser, par,
                ser / par);
  }
}
