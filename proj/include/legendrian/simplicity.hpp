#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"

namespace legendrian {

enum class CriterionCase {
  AllOnePeak,          // every summand has one peak
  OneTwoPeakMultiple,  // one summand with two peaks and count >= 2, others one peak
  OneBigPeakSingle,    // one summand with two or more peaks and count 1, others one peak
  None,
};

const char* to_string(CriterionCase c);

struct CriterionVerdict {
  bool simple = false;
  CriterionCase matched_case = CriterionCase::None;
  std::vector<std::size_t> peak_counts;  // per summand, in spec order
};

// Global simplicity of the sum, decided from peak counts and multiplicities.
CriterionVerdict criterion(const SumSpec& spec);

struct WindowVerdict {
  bool simple = true;
  int tb_min = 0;
  std::optional<Point> point;                  // a maximal nonsimple point
  std::optional<TupleClass> first, second;     // two distinct classes over it
};

// Decides simplicity of the window by enumerating every fiber.
WindowVerdict simplicity_in_window(const SumSpec& spec, int tb_min);

struct Witness {
  TupleClass first;
  TupleClass second;
  Point point;
};

// Two inequivalent tuples with equal tb and r, built from valleys of the
// summands: left parent of one valley against the right parent of another,
// and vice versa, with every other slot at a highest peak. Throws
// Error{NotApplicable} for simple sums.
Witness nonsimplicity_witness(const SumSpec& spec);

// S+^a S-^b ((#^p P1) # (#^q P2)) for a two-peak knot with peaks P1, P2.
struct CanonicalForm {
  int a = 0;
  int b = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// (tb, r) of the class a form stands for.
Point form_invariants(const MountainRange& range, int n, const CanonicalForm& form);

// The representation of (tb, r) in #^n K with the smallest q, or nullopt when
// the point is not a class of #^n K. Throws Error{WrongPeakCount}.
std::optional<CanonicalForm> canonical_form(const MountainRange& range, int n, Point point);

struct XYInvariants {
  int x = 0;
  int y = 0;

  friend bool operator==(const XYInvariants&, const XYInvariants&) = default;
};

// X = q r'(P2) - b and Y = p r'(P1) + a, computed from (tb, r) relative to
// the valley. Throws Error{WrongPeakCount}, or Error{NotApplicable} when the
// point has the wrong parity.
XYInvariants xy_invariants(const MountainRange& range, int n, Point point);

// Product over summands of the multiset coefficient C(|Peak| + a - 1, a).
std::uint64_t peak_count_formula(const SumSpec& spec);

}  // namespace legendrian
