#include "legendrian/composite.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "legendrian/error.hpp"
#include "quotient_kernels.hpp"

namespace legendrian {

SumSpec::SumSpec(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw Error(ErrorCode::InvalidSummand, "sum has no summands");
  std::set<std::string> seen;
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    const auto& summand = summands_[s];
    const auto& id = summand.range.knot_id;
    if (summand.count < 1) {
      throw Error(ErrorCode::InvalidSummand,
                  "summand '" + id + "' has count " + std::to_string(summand.count));
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::InvalidSummand, "knot '" + id + "' appears twice; merge the counts");
    }
    if (!summand.range.prime) {
      throw Error(ErrorCode::InvalidSummand, "knot '" + id + "' is not declared prime");
    }
    const auto report = validate_range(summand.range);
    if (!report.valid()) {
      throw Error(ErrorCode::InvalidSummand,
                  "knot '" + id + "' has an invalid range: " + report.issues.front().message);
    }
    offsets_.push_back(static_cast<std::size_t>(total_));
    for (int k = 0; k < summand.count; ++k) owner_.push_back(s);
    total_ += summand.count;
  }
}

std::optional<std::size_t> SumSpec::find(const std::string& knot_id) const {
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    if (summands_[s].range.knot_id == knot_id) return s;
  }
  return std::nullopt;
}

int SumSpec::top_tb() const {
  int top = total_ - 1;
  for (const auto& s : summands_) top += s.count * s.range.top_tb();
  return top;
}

bool operator<(const TupleClass& a, const TupleClass& b) {
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                      b.factors.end(), factor_precedes);
}

Point sum_invariants(const TupleClass& tuple) {
  Point total{static_cast<int>(tuple.factors.size()) - 1, 0};
  for (const Point f : tuple.factors) {
    total.tb += f.tb;
    total.r += f.r;
  }
  return total;
}

TupleClass canonicalize(TupleClass tuple, const SumSpec& spec) {
  for (std::size_t s = 0; s < spec.summands().size(); ++s) {
    auto first = tuple.factors.begin() + static_cast<std::ptrdiff_t>(spec.offset(s));
    std::sort(first, first + spec.summands()[s].count, factor_precedes);
  }
  return tuple;
}

TupleClass canonicalize_tuple(std::span<const SimpleClass> factors, const SumSpec& spec) {
  if (factors.size() != static_cast<std::size_t>(spec.total())) {
    throw Error(ErrorCode::MultiplicityMismatch,
                "expected " + std::to_string(spec.total()) + " factors, got " +
                    std::to_string(factors.size()));
  }
  std::vector<std::vector<Point>> blocks(spec.summands().size());
  for (const auto& f : factors) {
    const auto s = spec.find(f.knot_id);
    if (!s) {
      throw Error(ErrorCode::MultiplicityMismatch, "knot '" + f.knot_id + "' is not a summand");
    }
    blocks[*s].push_back(f.point);
  }
  TupleClass tuple;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const auto& summand = spec.summands()[s];
    if (blocks[s].size() != static_cast<std::size_t>(summand.count)) {
      throw Error(ErrorCode::MultiplicityMismatch,
                  "knot '" + summand.range.knot_id + "' occurs " +
                      std::to_string(blocks[s].size()) + " times, expected " +
                      std::to_string(summand.count));
    }
    std::sort(blocks[s].begin(), blocks[s].end(), factor_precedes);
    tuple.factors.insert(tuple.factors.end(), blocks[s].begin(), blocks[s].end());
  }
  return tuple;
}

std::vector<SimpleClass> to_classes(const TupleClass& tuple, const SumSpec& spec) {
  std::vector<SimpleClass> out;
  out.reserve(tuple.factors.size());
  for (std::size_t i = 0; i < tuple.factors.size(); ++i) {
    out.push_back({spec.range_at(i).knot_id, tuple.factors[i]});
  }
  return out;
}

std::vector<TupleClass> relation_neighbors(const TupleClass& tuple, const SumSpec& spec) {
  std::vector<TupleClass> out;
  const std::size_t n = tuple.factors.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const Sign s : {Sign::Plus, Sign::Minus}) {
      const auto parent = destabilize(spec.range_at(i), tuple.factors[i], s);
      if (!parent) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        TupleClass moved = tuple;
        moved.factors[i] = *parent;
        moved.factors[j] = stabilize(moved.factors[j], s);
        out.push_back(canonicalize(std::move(moved), spec));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TupleClass> fiber_tuples(const SumSpec& spec, Point point) {
  return detail::FiberEnumerator(spec, point.tb - (spec.total() - 1)).tuples_with_r(point.r);
}

std::vector<FiberClass> enumerate_fiber(const SumSpec& spec, Point point) {
  return detail::partition_fiber(spec, fiber_tuples(spec, point));
}

std::vector<SumPeak> peaks_of_sum(const SumSpec& spec) {
  // Multisets of peaks per summand, as non-increasing index sequences.
  std::vector<std::vector<std::vector<Point>>> blocks;
  for (const auto& summand : spec.summands()) {
    std::vector<std::vector<Point>> choices;
    const auto& peaks = summand.range.peaks;
    std::vector<std::size_t> idx(static_cast<std::size_t>(summand.count), 0);
    while (true) {
      std::vector<Point> block;
      for (const auto i : idx) block.push_back(peaks[i]);
      std::sort(block.begin(), block.end(), factor_precedes);
      choices.push_back(std::move(block));
      // next non-decreasing index sequence
      std::size_t k = idx.size();
      while (k > 0 && idx[k - 1] + 1 == peaks.size()) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t m = k; m < idx.size(); ++m) idx[m] = idx[k - 1];
    }
    blocks.push_back(std::move(choices));
  }

  std::vector<SumPeak> out;
  std::vector<std::size_t> pick(blocks.size(), 0);
  while (true) {
    TupleClass tuple;
    for (std::size_t s = 0; s < blocks.size(); ++s) {
      const auto& b = blocks[s][pick[s]];
      tuple.factors.insert(tuple.factors.end(), b.begin(), b.end());
    }
    const Point p = sum_invariants(tuple);
    out.push_back({std::move(tuple), p});
    std::size_t s = blocks.size();
    while (s > 0 && pick[s - 1] + 1 == blocks[s - 1].size()) {
      pick[s - 1] = 0;
      --s;
    }
    if (s == 0) break;
    ++pick[s - 1];
  }
  std::sort(out.begin(), out.end(),
            [](const SumPeak& a, const SumPeak& b) { return a.tuple < b.tuple; });
  return out;
}

QuotientPoset::QuotientPoset(int tb_min, int tb_top, std::vector<QuotientNode> nodes,
                             std::vector<QuotientEdge> edges)
    : tb_min_(tb_min), tb_top_(tb_top), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  parents_.resize(nodes_.size());
  children_.resize(nodes_.size());
  for (const auto& e : edges_) {
    if (e.from >= nodes_.size() || e.to >= nodes_.size()) {
      throw Error(ErrorCode::WindowTooShallow, "edge refers to a node outside the poset");
    }
    parents_[e.to].push_back(e);
    children_[e.from].push_back(e);
  }
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const auto& node = nodes_[id];
    by_point_[node.point].push_back(id);
    if (node.members.empty()) {
      by_tuple_.emplace(node.representative, id);
    } else {
      for (const auto& m : node.members) by_tuple_.emplace(m, id);
    }
  }
}

std::vector<std::size_t> QuotientPoset::children(std::size_t id, Sign s) const {
  std::vector<std::size_t> out;
  for (const auto& e : children_[id]) {
    if (e.sign == s) out.push_back(e.to);
  }
  return out;
}

std::vector<std::size_t> QuotientPoset::parents(std::size_t id, Sign s) const {
  std::vector<std::size_t> out;
  for (const auto& e : parents_[id]) {
    if (e.sign == s) out.push_back(e.from);
  }
  return out;
}

std::vector<std::size_t> QuotientPoset::fiber(Point p) const {
  auto it = by_point_.find(p);
  if (it == by_point_.end()) return {};
  return it->second;
}

std::vector<Point> QuotientPoset::points() const {
  std::vector<Point> out;
  std::set<Point> seen;
  for (const auto& node : nodes_) {
    if (seen.insert(node.point).second) out.push_back(node.point);
  }
  return out;
}

std::optional<std::size_t> QuotientPoset::find(const TupleClass& tuple) const {
  auto it = by_tuple_.find(tuple);
  if (it == by_tuple_.end()) return std::nullopt;
  return it->second;
}

}  // namespace legendrian
