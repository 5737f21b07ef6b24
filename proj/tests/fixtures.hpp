#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"

namespace fixtures {

using legendrian::MountainRange;
using legendrian::Point;
using legendrian::SumSpec;

inline MountainRange U1() { return {"U1", {{-1, 0}}, 0, true}; }
inline MountainRange C() { return {"C", {{1, 0}}, 1, true}; }
inline MountainRange A() { return {"A", {{0, -2}, {0, 2}}, 2, true}; }
inline MountainRange B() { return {"B", {{0, -4}, {0, 0}, {0, 4}}, 3, true}; }
// A translated two units to the right, under its own name.
inline MountainRange A_shifted() { return {"A'", {{0, 0}, {0, 4}}, std::nullopt, true}; }
// Same peaks as A, different knot.
inline MountainRange A_twin() { return {"A2", {{0, -2}, {0, 2}}, 2, true}; }

inline SumSpec sum(std::initializer_list<std::pair<MountainRange, int>> parts) {
  std::vector<legendrian::Summand> summands;
  for (const auto& [range, count] : parts) summands.push_back({range, count});
  return SumSpec(std::move(summands));
}

inline legendrian::TupleClass tuple(std::initializer_list<Point> factors) {
  return legendrian::TupleClass{std::vector<Point>(factors)};
}

}  // namespace fixtures
