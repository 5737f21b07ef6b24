#pragma once

// Building blocks shared by the parallel and serial quotient builders.

#include <cstddef>
#include <vector>

#include "legendrian/composite.hpp"

namespace legendrian::detail {

// Enumerates canonical tuples whose factor tb values add up to a fixed total.
class FiberEnumerator {
 public:
  FiberEnumerator(const SumSpec& spec, int factor_tb_total);

  // Canonical tuples with the given factor r total, ascending.
  std::vector<TupleClass> tuples_with_r(int r_total) const;

 private:
  struct Levels {
    int top = 0;
    int bottom = 0;
    std::vector<std::vector<int>> rs;  // rs[top - tb], descending r
  };

  void descend(std::size_t pos, int tb_left, int r_left, std::vector<Point>& prefix,
               std::vector<TupleClass>& out) const;

  const SumSpec& spec_;
  int tb_total_;
  std::vector<Levels> levels_;          // per summand
  // Sums over positions >= i of: top tb, min(r - tb) and max(r + tb) over
  // the peaks. Every member satisfies r - tb >= min and r + tb <= max.
  std::vector<int> suffix_top_;
  std::vector<int> suffix_left_;
  std::vector<int> suffix_right_;
};

// Connected components of a fiber under relation_neighbors.
std::vector<FiberClass> partition_fiber(const SumSpec& spec, std::vector<TupleClass> tuples);

// Candidate points of the window in node order (tb descending, r ascending).
std::vector<Point> window_points(const SumSpec& spec, int tb_min);

// Nodes from per-point fibers, in the order given.
std::vector<QuotientNode> assemble_nodes(const std::vector<Point>& points,
                                         std::vector<std::vector<FiberClass>> fibers);

// Signed stabilization edges leaving `node`, sorted and deduplicated.
std::vector<QuotientEdge> node_edges(const SumSpec& spec, const std::vector<QuotientNode>& nodes,
                                     std::size_t node, int tb_min,
                                     const std::vector<std::pair<TupleClass, std::size_t>>& index);

// Sorted (tuple, node id) pairs over every member of every node.
std::vector<std::pair<TupleClass, std::size_t>> index_members(
    const std::vector<QuotientNode>& nodes);

void check_window(const SumSpec& spec, int tb_min);

}  // namespace legendrian::detail
