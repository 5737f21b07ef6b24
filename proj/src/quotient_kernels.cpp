#include "quotient_kernels.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "legendrian/error.hpp"

namespace legendrian::detail {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

int min_r_minus_tb(const MountainRange& range) {
  int best = range.peaks.front().r - range.peaks.front().tb;
  for (const Point p : range.peaks) best = std::min(best, p.r - p.tb);
  return best;
}

int max_r_plus_tb(const MountainRange& range) {
  int best = range.peaks.front().r + range.peaks.front().tb;
  for (const Point p : range.peaks) best = std::max(best, p.r + p.tb);
  return best;
}

}  // namespace

FiberEnumerator::FiberEnumerator(const SumSpec& spec, int factor_tb_total)
    : spec_(spec), tb_total_(factor_tb_total) {
  const auto n = static_cast<std::size_t>(spec.total());
  suffix_top_.assign(n + 1, 0);
  suffix_left_.assign(n + 1, 0);
  suffix_right_.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    const auto& range = spec.range_at(i);
    suffix_top_[i] = suffix_top_[i + 1] + range.top_tb();
    suffix_left_[i] = suffix_left_[i + 1] + min_r_minus_tb(range);
    suffix_right_[i] = suffix_right_[i + 1] + max_r_plus_tb(range);
  }
  for (const auto& summand : spec.summands()) {
    const int top = summand.range.top_tb();
    // A factor cannot sit lower than what is left once every other factor
    // takes its highest tb.
    const int bottom = factor_tb_total - (suffix_top_[0] - top);
    Levels lv{top, bottom, {}};
    for (int tb = top; tb >= bottom; --tb) {
      auto rs = level_points(summand.range, tb);
      std::reverse(rs.begin(), rs.end());
      lv.rs.push_back(std::move(rs));
    }
    levels_.push_back(std::move(lv));
  }
}

std::vector<TupleClass> FiberEnumerator::tuples_with_r(int r_total) const {
  std::vector<TupleClass> out;
  if (tb_total_ > suffix_top_[0]) return out;
  std::vector<Point> prefix;
  prefix.reserve(static_cast<std::size_t>(spec_.total()));
  descend(0, tb_total_, r_total, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

void FiberEnumerator::descend(std::size_t pos, int tb_left, int r_left,
                              std::vector<Point>& prefix, std::vector<TupleClass>& out) const {
  if (r_left - tb_left < suffix_left_[pos] || r_left + tb_left > suffix_right_[pos]) return;
  const auto n = static_cast<std::size_t>(spec_.total());
  const std::size_t summand = spec_.summand_of(pos);
  const bool same_block = pos > 0 && spec_.summand_of(pos - 1) == summand;
  const auto& lv = levels_[summand];

  if (pos + 1 == n) {
    const Point last{tb_left, r_left};
    if (same_block && factor_precedes(last, prefix.back())) return;
    if (!is_member(spec_.range_at(pos), last)) return;
    TupleClass t{prefix};
    t.factors.push_back(last);
    out.push_back(std::move(t));
    return;
  }

  int upper = lv.top;
  if (same_block) upper = std::min(upper, prefix.back().tb);
  const int lower = std::max(lv.bottom, tb_left - suffix_top_[pos + 1]);
  for (int tb = upper; tb >= lower; --tb) {
    for (const int r : lv.rs[static_cast<std::size_t>(lv.top - tb)]) {
      const Point f{tb, r};
      if (same_block && factor_precedes(f, prefix.back())) continue;
      prefix.push_back(f);
      descend(pos + 1, tb_left - tb, r_left - r, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<FiberClass> partition_fiber(const SumSpec& spec, std::vector<TupleClass> tuples) {
  DisjointSets sets(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (const auto& nb : relation_neighbors(tuples[i], spec)) {
      auto it = std::lower_bound(tuples.begin(), tuples.end(), nb);
      // Neighbors keep the sum invariants, so they are always in the fiber.
      sets.unite(i, static_cast<std::size_t>(it - tuples.begin()));
    }
  }
  std::vector<FiberClass> classes;
  std::vector<std::size_t> slot(tuples.size(), tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto root = sets.find(i);
    if (slot[root] == tuples.size()) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].members.push_back(std::move(tuples[i]));
  }
  // Tuples were ascending, so each class is too and classes come out ordered
  // by their least member.
  return classes;
}

void check_window(const SumSpec& spec, int tb_min) {
  if (tb_min > spec.top_tb()) {
    throw Error(ErrorCode::WindowEmpty, "window floor " + std::to_string(tb_min) +
                                            " is above the top level " +
                                            std::to_string(spec.top_tb()));
  }
}

std::vector<Point> window_points(const SumSpec& spec, int tb_min) {
  const int n = spec.total();
  int left = 0;
  int right = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    left += min_r_minus_tb(spec.range_at(i));
    right += max_r_plus_tb(spec.range_at(i));
  }
  // Every class of the sum has the same tb + r parity.
  int parity = n - 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const Point p = spec.range_at(i).peaks.front();
    parity += p.tb + p.r;
  }
  std::vector<Point> out;
  for (int tb = spec.top_tb(); tb >= tb_min; --tb) {
    const int factor_tb = tb - (n - 1);
    int r = left + factor_tb;
    if ((tb + r - parity) % 2 != 0) ++r;
    for (; r <= right - factor_tb; r += 2) out.push_back({tb, r});
  }
  return out;
}

std::vector<QuotientNode> assemble_nodes(const std::vector<Point>& points,
                                         std::vector<std::vector<FiberClass>> fibers) {
  std::vector<QuotientNode> nodes;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (auto& cls : fibers[i]) {
      QuotientNode node;
      node.point = points[i];
      node.representative = cls.representative();
      node.members = std::move(cls.members);
      nodes.push_back(std::move(node));
    }
  }
  return nodes;
}

std::vector<std::pair<TupleClass, std::size_t>> index_members(
    const std::vector<QuotientNode>& nodes) {
  std::vector<std::pair<TupleClass, std::size_t>> index;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (const auto& m : nodes[id].members) index.emplace_back(m, id);
  }
  std::sort(index.begin(), index.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return index;
}

std::vector<QuotientEdge> node_edges(const SumSpec& spec, const std::vector<QuotientNode>& nodes,
                                     std::size_t node, int tb_min,
                                     const std::vector<std::pair<TupleClass, std::size_t>>& index) {
  std::vector<QuotientEdge> edges;
  if (nodes[node].point.tb <= tb_min) return edges;
  for (const auto& member : nodes[node].members) {
    for (std::size_t pos = 0; pos < member.factors.size(); ++pos) {
      for (const Sign s : {Sign::Plus, Sign::Minus}) {
        TupleClass child = member;
        child.factors[pos] = stabilize(child.factors[pos], s);
        child = canonicalize(std::move(child), spec);
        auto it = std::lower_bound(index.begin(), index.end(), child,
                                   [](const auto& entry, const TupleClass& t) {
                                     return entry.first < t;
                                   });
        edges.push_back({node, it->second, s});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const QuotientEdge& a, const QuotientEdge& b) {
    return std::tie(a.to, a.sign) < std::tie(b.to, b.sign);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace legendrian::detail
