#include "legendrian/simplicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "legendrian/error.hpp"
#include "legendrian/poset_analysis.hpp"

namespace legendrian {

namespace {

int ceil_div(int x, int d) { return x >= 0 ? (x + d - 1) / d : -((-x) / d); }

Point highest_peak(const MountainRange& range) {
  return *std::min_element(range.peaks.begin(), range.peaks.end(), factor_precedes);
}

Point left_parent(Point v) { return {v.tb + 1, v.r - 1}; }
Point right_parent(Point v) { return {v.tb + 1, v.r + 1}; }

void require_two_peaks(const MountainRange& range) {
  if (range.peaks.size() != 2) {
    throw Error(ErrorCode::WrongPeakCount, "knot '" + range.knot_id + "' has " +
                                               std::to_string(range.peaks.size()) +
                                               " peaks, expected 2");
  }
}

// Twice X and twice -Y before halving; equal parity.
struct DoubledXY {
  int x2;
  int y2;
};

DoubledXY doubled_xy(const MountainRange& range, int n, Point point) {
  require_two_peaks(range);
  if (n < 1) throw Error(ErrorCode::NotApplicable, "n must be at least 1");
  const Point v = valleys(range).front().point;
  return {(point.tb + point.r) - n * (v.tb + v.r) - (n - 1),
          -((point.tb - point.r) - n * (v.tb - v.r) - (n - 1))};
}

}  // namespace

const char* to_string(CriterionCase c) {
  switch (c) {
    case CriterionCase::AllOnePeak: return "all-one-peak";
    case CriterionCase::OneTwoPeakMultiple: return "one-two-peak-with-multiplicity>=2";
    case CriterionCase::OneBigPeakSingle: return "one-big-peak-multiplicity-1";
    case CriterionCase::None: return "none";
  }
  return "unknown";
}

CriterionVerdict criterion(const SumSpec& spec) {
  CriterionVerdict verdict;
  std::vector<std::size_t> multi;
  for (std::size_t s = 0; s < spec.summands().size(); ++s) {
    const auto count = spec.summands()[s].range.peaks.size();
    verdict.peak_counts.push_back(count);
    if (count > 1) multi.push_back(s);
  }
  if (multi.empty()) {
    verdict.matched_case = CriterionCase::AllOnePeak;
  } else if (multi.size() == 1) {
    const auto& summand = spec.summands()[multi.front()];
    if (summand.range.peaks.size() == 2 && summand.count >= 2) {
      verdict.matched_case = CriterionCase::OneTwoPeakMultiple;
    } else if (summand.count == 1) {
      verdict.matched_case = CriterionCase::OneBigPeakSingle;
    }
  }
  verdict.simple = verdict.matched_case != CriterionCase::None;
  return verdict;
}

WindowVerdict simplicity_in_window(const SumSpec& spec, int tb_min) {
  const auto poset = build_quotient(spec, tb_min);
  WindowVerdict verdict;
  verdict.tb_min = tb_min;
  const auto nmax = find_nmax(poset);
  if (nmax.empty()) return verdict;
  verdict.simple = false;
  verdict.point = nmax.front();
  const auto fiber = poset.fiber(nmax.front());
  verdict.first = poset.nodes()[fiber[0]].representative;
  verdict.second = poset.nodes()[fiber[1]].representative;
  return verdict;
}

Witness nonsimplicity_witness(const SumSpec& spec) {
  if (criterion(spec).simple) {
    throw Error(ErrorCode::NotApplicable, "the sum is Legendrian simple; no witness exists");
  }
  const auto& summands = spec.summands();
  TupleClass base;
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.total()); ++i) {
    base.factors.push_back(highest_peak(spec.range_at(i)));
  }
  TupleClass first = base;
  TupleClass second = base;

  auto many_peaks = std::find_if(summands.begin(), summands.end(), [](const Summand& s) {
    return s.range.peaks.size() >= 3 && s.count >= 2;
  });
  if (many_peaks != summands.end()) {
    // Two valleys of one summand, used in two of its slots.
    const auto s = static_cast<std::size_t>(many_peaks - summands.begin());
    const auto vs = valleys(many_peaks->range);
    const std::size_t at = spec.offset(s);
    first.factors[at] = left_parent(vs[0].point);
    first.factors[at + 1] = right_parent(vs[1].point);
    second.factors[at] = right_parent(vs[0].point);
    second.factors[at + 1] = left_parent(vs[1].point);
  } else {
    // One valley from each of two summands with several peaks.
    std::vector<std::size_t> multi;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      if (summands[s].range.peaks.size() >= 2) multi.push_back(s);
    }
    const Point v1 = valleys(summands[multi[0]].range).front().point;
    const Point v2 = valleys(summands[multi[1]].range).front().point;
    const std::size_t at1 = spec.offset(multi[0]);
    const std::size_t at2 = spec.offset(multi[1]);
    first.factors[at1] = left_parent(v1);
    first.factors[at2] = right_parent(v2);
    second.factors[at1] = right_parent(v1);
    second.factors[at2] = left_parent(v2);
  }
  first = canonicalize(std::move(first), spec);
  second = canonicalize(std::move(second), spec);
  const Point point = sum_invariants(first);

  const auto classes = enumerate_fiber(spec, point);
  auto class_of = [&classes](const TupleClass& t) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& m = classes[c].members;
      if (std::binary_search(m.begin(), m.end(), t)) return c;
    }
    return classes.size();
  };
  if (class_of(first) == class_of(second)) {
    throw std::logic_error("witness tuples are equivalent");
  }
  return {std::move(first), std::move(second), point};
}

Point form_invariants(const MountainRange& range, int n, const CanonicalForm& form) {
  require_two_peaks(range);
  const Point p1 = range.peaks[0];
  const Point p2 = range.peaks[1];
  return {form.p * p1.tb + form.q * p2.tb + (n - 1) - form.a - form.b,
          form.p * p1.r + form.q * p2.r + form.a - form.b};
}

std::optional<CanonicalForm> canonical_form(const MountainRange& range, int n, Point point) {
  const auto d = doubled_xy(range, n, point);
  if (d.x2 % 2 != 0) return std::nullopt;
  const int x = d.x2 / 2;
  const int y = d.y2 / 2;
  const Point v = valleys(range).front().point;
  const int rel1 = range.peaks[0].r - v.r;  // negative
  const int rel2 = range.peaks[1].r - v.r;  // positive

  CanonicalForm form;
  form.q = std::max(0, ceil_div(x, rel2));
  if (form.q > n) return std::nullopt;
  form.p = n - form.q;
  form.b = form.q * rel2 - x;
  form.a = y - form.p * rel1;
  if (form.a < 0) return std::nullopt;
  return form;
}

XYInvariants xy_invariants(const MountainRange& range, int n, Point point) {
  const auto d = doubled_xy(range, n, point);
  if (d.x2 % 2 != 0) {
    throw Error(ErrorCode::NotApplicable, "(" + std::to_string(point.tb) + "," +
                                              std::to_string(point.r) +
                                              ") has the wrong tb+r parity for this sum");
  }
  return {d.x2 / 2, d.y2 / 2};
}

std::uint64_t peak_count_formula(const SumSpec& spec) {
  std::uint64_t total = 1;
  for (const auto& s : spec.summands()) {
    // C(k + a - 1, a), built incrementally so every step stays integral.
    const std::uint64_t k = s.range.peaks.size();
    std::uint64_t c = 1;
    for (std::uint64_t j = 1; j <= static_cast<std::uint64_t>(s.count); ++j) {
      c = c * (k - 1 + j) / j;
    }
    total *= c;
  }
  return total;
}

}  // namespace legendrian
