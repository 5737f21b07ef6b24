#include "legendrian/poset_analysis.hpp"

#include <algorithm>
#include <set>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

std::set<std::size_t> parent_ids(const TruncatedPoset& poset, std::size_t id) {
  std::set<std::size_t> out;
  for (const auto& e : poset.parents(id)) out.insert(e.from);
  return out;
}

std::set<std::size_t> step_down(const TruncatedPoset& poset, const std::set<std::size_t>& from,
                                Sign s) {
  std::set<std::size_t> out;
  for (const auto id : from) {
    for (const auto c : poset.children(id, s)) out.insert(c);
  }
  return out;
}

}  // namespace

const char* to_string(DichotomyCase c) {
  switch (c) {
    case DichotomyCase::PeakInFiber: return "case1";
    case DichotomyCase::TwoClassValley: return "case2";
    case DichotomyCase::Violation: return "violation";
  }
  return "unknown";
}

std::vector<std::size_t> detect_peaks(const TruncatedPoset& poset) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < poset.nodes().size(); ++id) {
    if (poset.parents(id).empty()) out.push_back(id);
  }
  return out;
}

std::vector<std::size_t> detect_valleys(const TruncatedPoset& poset) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < poset.nodes().size(); ++id) {
    const auto parents = parent_ids(poset, id);
    bool valley = false;
    for (auto a = parents.begin(); a != parents.end() && !valley; ++a) {
      const auto above_a = parent_ids(poset, *a);
      for (auto b = std::next(a); b != parents.end() && !valley; ++b) {
        const auto above_b = parent_ids(poset, *b);
        valley = std::none_of(above_a.begin(), above_a.end(),
                              [&](std::size_t g) { return above_b.count(g) > 0; });
      }
    }
    if (valley) out.push_back(id);
  }
  return out;
}

std::vector<Point> image_parents(const TruncatedPoset& poset, Point p) {
  std::set<Point> out;
  for (const auto id : poset.fiber(p)) {
    for (const auto& e : poset.parents(id)) out.insert(poset.nodes()[e.from].point);
  }
  return {out.begin(), out.end()};
}

std::vector<Point> find_nmax(const TruncatedPoset& poset) {
  std::vector<Point> out;
  for (const Point p : poset.points()) {
    if (poset.fiber_size(p) < 2) continue;
    // Walk up through every ancestor class.
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack;
    for (const auto id : poset.fiber(p)) stack.push_back(id);
    bool maximal = true;
    while (!stack.empty() && maximal) {
      const auto id = stack.back();
      stack.pop_back();
      for (const auto& e : poset.parents(id)) {
        if (!seen.insert(e.from).second) continue;
        if (poset.fiber_size(poset.nodes()[e.from].point) >= 2) {
          maximal = false;
          break;
        }
        stack.push_back(e.from);
      }
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

std::vector<NmaxVerdict> check_nmax_dichotomy(const TruncatedPoset& poset) {
  std::vector<NmaxVerdict> out;
  for (const Point p : find_nmax(poset)) {
    const auto fiber = poset.fiber(p);
    for (const auto id : fiber) {
      for (const auto& e : poset.parents(id)) {
        const int tb = poset.nodes()[e.from].point.tb;
        if (tb > poset.tb_top() || tb < poset.tb_min()) {
          throw Error(ErrorCode::WindowTooShallow,
                      "ancestors of (" + std::to_string(p.tb) + "," + std::to_string(p.r) +
                          ") leave the window");
        }
      }
    }
    NmaxVerdict v{p, fiber.size(), DichotomyCase::Violation};
    const bool has_peak = std::any_of(fiber.begin(), fiber.end(), [&](std::size_t id) {
      return poset.parents(id).empty();
    });
    if (has_peak) {
      v.verdict = DichotomyCase::PeakInFiber;
    } else if (fiber.size() == 2) {
      // Valley of the image: both parent points present, with no common
      // parent point above them.
      const auto parents = image_parents(poset, p);
      const Point left{p.tb + 1, p.r - 1};
      const Point right{p.tb + 1, p.r + 1};
      const bool both = std::find(parents.begin(), parents.end(), left) != parents.end() &&
                        std::find(parents.begin(), parents.end(), right) != parents.end();
      if (both) {
        const auto above_left = image_parents(poset, left);
        const auto above_right = image_parents(poset, right);
        const bool common = std::any_of(above_left.begin(), above_left.end(), [&](Point q) {
          return std::find(above_right.begin(), above_right.end(), q) != above_right.end();
        });
        if (!common) v.verdict = DichotomyCase::TwoClassValley;
      }
    }
    out.push_back(v);
  }
  return out;
}

NonsimpleReport analyze_nonsimple(const TruncatedPoset& poset) {
  NonsimpleReport report;
  for (const Point p : poset.points()) {
    const auto size = poset.fiber_size(p);
    if (size >= 2) report.nonsimple.push_back({p, size});
  }
  report.verdicts = check_nmax_dichotomy(poset);
  return report;
}

bool stabilizations_commute(const TruncatedPoset& poset) {
  for (std::size_t id = 0; id < poset.nodes().size(); ++id) {
    if (poset.nodes()[id].point.tb < poset.tb_min() + 2) continue;
    const std::set<std::size_t> start{id};
    const auto plus_minus = step_down(poset, step_down(poset, start, Sign::Plus), Sign::Minus);
    const auto minus_plus = step_down(poset, step_down(poset, start, Sign::Minus), Sign::Plus);
    if (plus_minus != minus_plus || plus_minus.empty()) return false;
  }
  return true;
}

}  // namespace legendrian
