#include "legendrian/mountain_range.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

bool is_even(int v) { return v % 2 == 0; }

std::string describe(Point p) {
  std::ostringstream os;
  os << '(' << p.tb << ',' << p.r << ')';
  return os.str();
}

// Intersection of the S+ slope of `left` with the S- slope of `right`.
// Returns the doubled r coordinate so non-integral valleys can be detected.
int doubled_valley_r(Point left, Point right) {
  return left.r + right.r + left.tb - right.tb;
}

}  // namespace

int MountainRange::top_tb() const {
  int top = peaks.empty() ? 0 : peaks.front().tb;
  for (const auto& p : peaks) top = std::max(top, p.tb);
  return top;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::EmptyRange: return "empty-range";
    case Violation::PeakOrder: return "peak-order";
    case Violation::Parity: return "parity";
    case Violation::Domination: return "domination";
    case Violation::NonIntegralValley: return "non-integral-valley";
    case Violation::MisplacedValley: return "misplaced-valley";
    case Violation::NegativeGenus: return "negative-genus";
    case Violation::Bennequin: return "bennequin";
  }
  return "unknown";
}

bool ValidationReport::has(Violation kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const ValidationIssue& i) { return i.kind == kind; });
}

ValidationReport validate_range(const MountainRange& range) {
  ValidationReport report;
  auto add = [&report](Violation kind, std::string msg) {
    report.issues.push_back({kind, std::move(msg)});
  };
  const auto& peaks = range.peaks;
  if (peaks.empty()) {
    add(Violation::EmptyRange, "range has no peaks");
    return report;
  }

  for (std::size_t i = 1; i < peaks.size(); ++i) {
    if (peaks[i].r <= peaks[i - 1].r) {
      add(Violation::PeakOrder, "peak " + std::to_string(i) + " " + describe(peaks[i]) +
                                    " does not have r strictly greater than peak " +
                                    std::to_string(i - 1) + " " + describe(peaks[i - 1]));
    }
  }

  const bool parity = is_even(peaks.front().tb + peaks.front().r);
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    if (is_even(peaks[i].tb + peaks[i].r) != parity) {
      add(Violation::Parity, "peak " + std::to_string(i) + " " + describe(peaks[i]) +
                                 " has tb+r parity different from peak 0 " +
                                 describe(peaks.front()));
    }
  }

  for (std::size_t i = 0; i < peaks.size(); ++i) {
    for (std::size_t j = 0; j < peaks.size(); ++j) {
      if (i == j) continue;
      if (peaks[i].tb - peaks[j].tb >= std::abs(peaks[i].r - peaks[j].r)) {
        add(Violation::Domination, "peak " + std::to_string(j) + " " + describe(peaks[j]) +
                                       " is dominated by peak " + std::to_string(i) + " " +
                                       describe(peaks[i]));
      }
    }
  }

  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    const Point left = peaks[i];
    const Point right = peaks[i + 1];
    const int twice_r = doubled_valley_r(left, right);
    if (!is_even(twice_r)) {
      add(Violation::NonIntegralValley, "valley between peaks " + std::to_string(i) + " and " +
                                            std::to_string(i + 1) + " is not a lattice point");
      continue;
    }
    const int vr = twice_r / 2;
    if (!(left.r < vr && vr < right.r)) {
      add(Violation::MisplacedValley,
          "valley between peaks " + std::to_string(i) + " and " + std::to_string(i + 1) +
              " has r=" + std::to_string(vr) + ", not strictly between " +
              std::to_string(left.r) + " and " + std::to_string(right.r));
    }
  }

  if (range.genus) {
    const int g = *range.genus;
    if (g < 0) {
      add(Violation::NegativeGenus, "genus " + std::to_string(g) + " is negative");
    } else {
      for (std::size_t i = 0; i < peaks.size(); ++i) {
        if (peaks[i].tb + std::abs(peaks[i].r) > 2 * g - 1) {
          add(Violation::Bennequin, "peak " + std::to_string(i) + " " + describe(peaks[i]) +
                                        " violates tb+|r| <= 2g-1 with g=" + std::to_string(g));
        }
      }
    }
  }
  return report;
}

std::vector<Valley> valleys(const MountainRange& range) {
  std::vector<Valley> out;
  const auto& peaks = range.peaks;
  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    const Point left = peaks[i];
    const Point right = peaks[i + 1];
    const int twice_r = doubled_valley_r(left, right);
    if (!is_even(twice_r)) {
      throw Error(ErrorCode::NonIntegralValley,
                  "valley between " + describe(left) + " and " + describe(right) +
                      " is not a lattice point");
    }
    const int vr = twice_r / 2;
    if (!(left.r < vr && vr < right.r)) {
      throw Error(ErrorCode::MisplacedValley,
                  "valley between " + describe(left) + " and " + describe(right) +
                      " has r=" + std::to_string(vr));
    }
    out.push_back({Point{left.tb - (vr - left.r), vr}, i, i + 1});
  }
  return out;
}

Membership contains(const MountainRange& range, Point p) {
  Membership m;
  for (std::size_t i = 0; i < range.peaks.size(); ++i) {
    const Point peak = range.peaks[i];
    const int drop = peak.tb - p.tb;
    const int shift = p.r - peak.r;
    // p = S+^a S-^b (peak) with a = (drop + shift)/2, b = (drop - shift)/2
    if (drop >= std::abs(shift) && is_even(drop + shift)) m.dominating_peaks.push_back(i);
  }
  m.member = !m.dominating_peaks.empty();
  return m;
}

bool is_member(const MountainRange& range, Point p) {
  for (const Point peak : range.peaks) {
    const int drop = peak.tb - p.tb;
    const int shift = p.r - peak.r;
    if (drop >= std::abs(shift) && is_even(drop + shift)) return true;
  }
  return false;
}

Point stabilize(Point p, Sign s) { return {p.tb - 1, p.r + rotation_step(s)}; }

SimpleClass stabilize(const SimpleClass& c, Sign s) { return {c.knot_id, stabilize(c.point, s)}; }

std::optional<Point> destabilize(const MountainRange& range, Point p, Sign s) {
  const Point parent{p.tb + 1, p.r - rotation_step(s)};
  if (is_member(range, parent)) return parent;
  return std::nullopt;
}

std::vector<int> level_points(const MountainRange& range, int tb) {
  std::vector<int> rs;
  for (const Point peak : range.peaks) {
    const int drop = peak.tb - tb;
    if (drop < 0) continue;
    for (int r = peak.r - drop; r <= peak.r + drop; r += 2) rs.push_back(r);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

int leftmost_reach(const MountainRange& range, int tb) {
  int best = 0;
  bool first = true;
  for (const Point peak : range.peaks) {
    const int v = peak.r - (peak.tb - tb);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

int rightmost_reach(const MountainRange& range, int tb) {
  int best = 0;
  bool first = true;
  for (const Point peak : range.peaks) {
    const int v = peak.r + (peak.tb - tb);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

}  // namespace legendrian
