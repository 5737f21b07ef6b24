#pragma once

#include <cstddef>
#include <vector>

#include "legendrian/composite.hpp"

namespace legendrian {

// Analyses work on any QuotientPoset, including hand-built ones.
using TruncatedPoset = QuotientPoset;

// Nodes with no parent.
std::vector<std::size_t> detect_peaks(const TruncatedPoset& poset);

// Nodes with two distinct parents that share no parent of their own.
std::vector<std::size_t> detect_valleys(const TruncatedPoset& poset);

// Points whose fiber has two or more classes and whose strict ancestors (the
// iterated parents of every class over the point) are all simple. Empty iff
// the window is simple.
std::vector<Point> find_nmax(const TruncatedPoset& poset);

enum class DichotomyCase {
  PeakInFiber,     // some class over the point has no parent
  TwoClassValley,  // exactly two classes, and the point is a valley of the image
  Violation,
};

const char* to_string(DichotomyCase c);

struct NmaxVerdict {
  Point point;
  std::size_t fiber_size = 0;
  DichotomyCase verdict = DichotomyCase::Violation;
};

// Classifies every N_max candidate. Vacuous (empty) on simple posets.
// Throws Error{WindowTooShallow} if a candidate's ancestors are not inside
// the poset's [tb_min, tb_top] band.
std::vector<NmaxVerdict> check_nmax_dichotomy(const TruncatedPoset& poset);

struct NonsimplePoint {
  Point point;
  std::size_t fiber_size = 0;
};

struct NonsimpleReport {
  std::vector<NonsimplePoint> nonsimple;
  std::vector<NmaxVerdict> verdicts;
};

NonsimpleReport analyze_nonsimple(const TruncatedPoset& poset);

// Parent points of `p` in the (tb, r) image of the poset.
std::vector<Point> image_parents(const TruncatedPoset& poset, Point p);

// S+ then S- reaches the same nodes as S- then S+, for every node at least
// two levels above the floor.
bool stabilizations_commute(const TruncatedPoset& poset);

}  // namespace legendrian
