#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace legendrian {

// A lattice point of the (tb, r) plane. tb is drawn vertically, r horizontally.
struct Point {
  int tb = 0;
  int r = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Sign { Plus, Minus };

constexpr int rotation_step(Sign s) { return s == Sign::Plus ? 1 : -1; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Mountain range of a Legendrian-simple knot, given by its peaks. Every
// member point is reachable from some peak by stabilizations.
struct MountainRange {
  std::string knot_id;
  std::vector<Point> peaks;  // strictly increasing r
  std::optional<int> genus;
  bool prime = true;

  int top_tb() const;
};

// One Legendrian class of a simple knot; identified with its (tb, r) point.
struct SimpleClass {
  std::string knot_id;
  Point point;

  friend bool operator==(const SimpleClass&, const SimpleClass&) = default;
};

struct Valley {
  Point point;
  std::size_t left_peak = 0;
  std::size_t right_peak = 0;

  friend bool operator==(const Valley&, const Valley&) = default;
};

enum class Violation {
  EmptyRange,
  PeakOrder,
  Parity,
  Domination,
  NonIntegralValley,
  MisplacedValley,
  NegativeGenus,
  Bennequin,
};

const char* to_string(Violation v);

struct ValidationIssue {
  Violation kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const { return issues.empty(); }
  bool has(Violation kind) const;
};

// Checks every structural invariant of a range and lists each violation.
ValidationReport validate_range(const MountainRange& range);

// Valley between each adjacent pair of peaks, in increasing r. The valley is
// where the S+ slope of the left peak meets the S- slope of the right one.
// Throws Error{NonIntegralValley} or Error{MisplacedValley}.
std::vector<Valley> valleys(const MountainRange& range);

struct Membership {
  bool member = false;
  std::vector<std::size_t> dominating_peaks;  // peaks whose cone holds the point
};

Membership contains(const MountainRange& range, Point p);
bool is_member(const MountainRange& range, Point p);

Point stabilize(Point p, Sign s);
SimpleClass stabilize(const SimpleClass& c, Sign s);

// The s-parent of p, i.e. the point q with stabilize(q, s) == p, if q is a
// member of the range.
std::optional<Point> destabilize(const MountainRange& range, Point p, Sign s);

// Sorted r values of the members at level tb.
std::vector<int> level_points(const MountainRange& range, int tb);

// Bounds on the r of any member at level tb; exact once tb is at or below
// every peak.
int leftmost_reach(const MountainRange& range, int tb);
int rightmost_reach(const MountainRange& range, int tb);

}  // namespace legendrian
