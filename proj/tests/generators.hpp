#pragma once

// Seeded generators for property tests.

#include <random>
#include <string>

#include "legendrian/mountain_range.hpp"

namespace gen {

// A random valid range: consecutive peaks are 2..max_gap apart in r and differ
// in tb by less than the gap, with matching tb+r parity.
inline legendrian::MountainRange range(std::mt19937& rng, const std::string& id, int max_peaks = 4,
                                       int max_gap = 6) {
  std::uniform_int_distribution<int> count(1, max_peaks);
  std::uniform_int_distribution<int> start(-3, 3);
  legendrian::MountainRange out;
  out.knot_id = id;
  legendrian::Point p{start(rng), start(rng)};
  out.peaks.push_back(p);
  const int n = count(rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> gap_dist(2, max_gap);
    const int gap = gap_dist(rng);
    std::uniform_int_distribution<int> dtb(-(gap - 1), gap - 1);
    int d = dtb(rng);
    if ((d + gap) % 2 != 0) d += d < 0 ? 1 : -1;
    p = {p.tb + d, p.r + gap};
    out.peaks.push_back(p);
  }
  return out;
}

}  // namespace gen
