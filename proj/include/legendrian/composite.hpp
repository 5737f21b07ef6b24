#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legendrian/mountain_range.hpp"

namespace legendrian {

struct Summand {
  MountainRange range;
  int count = 1;
};

// A connected sum (#^{a_1} K_1) # ... # (#^{a_m} K_m) of pairwise distinct,
// declared-prime, Legendrian-simple knots. Factor positions are laid out
// summand by summand in declaration order.
class SumSpec {
 public:
  // Throws Error{InvalidSummand} on an empty sum, a non-positive count,
  // duplicate knot ids, an invalid range or a knot not declared prime.
  explicit SumSpec(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  int total() const { return total_; }
  std::size_t summand_of(std::size_t position) const { return owner_[position]; }
  std::size_t offset(std::size_t summand) const { return offsets_[summand]; }
  const MountainRange& range_at(std::size_t position) const {
    return summands_[owner_[position]].range;
  }
  std::optional<std::size_t> find(const std::string& knot_id) const;

  // Highest tb of any class of the sum.
  int top_tb() const;

 private:
  std::vector<Summand> summands_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
  int total_ = 0;
};

// Strict weak order on factors: higher tb first, then higher r.
constexpr bool factor_precedes(Point a, Point b) {
  return a.tb > b.tb || (a.tb == b.tb && a.r > b.r);
}

// One class of the sum written as a tuple of factor classes. Positions follow
// SumSpec's layout; within a summand's block factors are sorted by
// factor_precedes, which quotients out permutations of identical summands.
struct TupleClass {
  std::vector<Point> factors;

  friend bool operator==(const TupleClass&, const TupleClass&) = default;
  // Lexicographic in factor_precedes; the least tuple of a class names it.
  friend bool operator<(const TupleClass& a, const TupleClass& b);
};

Point sum_invariants(const TupleClass& tuple);

// Sorts each summand block of a positional tuple.
TupleClass canonicalize(TupleClass tuple, const SumSpec& spec);

// Groups factors by knot id in spec order, then sorts each block. Throws
// Error{MultiplicityMismatch} if the factors do not match the multiplicities.
TupleClass canonicalize_tuple(std::span<const SimpleClass> factors, const SumSpec& spec);

std::vector<SimpleClass> to_classes(const TupleClass& tuple, const SumSpec& spec);

// Canonical tuples one stabilization transfer away: factor i is replaced by
// its s-parent and factor j by its s-stabilization, for all i != j and both
// signs. Sorted and deduplicated.
std::vector<TupleClass> relation_neighbors(const TupleClass& tuple, const SumSpec& spec);

// Every canonical tuple whose sum invariants are `point`, in ascending order.
std::vector<TupleClass> fiber_tuples(const SumSpec& spec, Point point);

struct FiberClass {
  std::vector<TupleClass> members;  // ascending; members.front() names the class

  const TupleClass& representative() const { return members.front(); }
};

// Classes of the sum lying over `point`, i.e. the connected components of
// fiber_tuples under relation_neighbors. Sorted by representative.
std::vector<FiberClass> enumerate_fiber(const SumSpec& spec, Point point);

struct SumPeak {
  TupleClass tuple;
  Point point;
};

// Tuples made only of peaks; these are exactly the peak classes of the sum.
std::vector<SumPeak> peaks_of_sum(const SumSpec& spec);

struct QuotientNode {
  Point point;
  TupleClass representative;
  std::vector<TupleClass> members;
};

struct QuotientEdge {
  std::size_t from = 0;  // parent
  std::size_t to = 0;    // child, one level lower
  Sign sign = Sign::Plus;

  friend bool operator==(const QuotientEdge&, const QuotientEdge&) = default;
};

// Window-truncated poset of classes (tb_min <= tb <= tb_top). Nodes are
// ordered by tb descending, then r ascending, then representative; a node's
// id is its index. Everything above a node is inside the window, so parents
// are always complete; children of floor nodes are cut off.
class QuotientPoset {
 public:
  QuotientPoset() = default;
  QuotientPoset(int tb_min, int tb_top, std::vector<QuotientNode> nodes,
                std::vector<QuotientEdge> edges);

  int tb_min() const { return tb_min_; }
  int tb_top() const { return tb_top_; }
  const std::vector<QuotientNode>& nodes() const { return nodes_; }
  const std::vector<QuotientEdge>& edges() const { return edges_; }

  // Parent edges of a node (edges whose `to` is the node).
  const std::vector<QuotientEdge>& parents(std::size_t id) const { return parents_[id]; }
  const std::vector<QuotientEdge>& children(std::size_t id) const { return children_[id]; }
  std::vector<std::size_t> children(std::size_t id, Sign s) const;
  std::vector<std::size_t> parents(std::size_t id, Sign s) const;

  // Node ids over a point, ascending.
  std::vector<std::size_t> fiber(Point p) const;
  std::size_t fiber_size(Point p) const { return fiber(p).size(); }
  // Points carrying at least one node, ordered as the nodes are.
  std::vector<Point> points() const;

  std::optional<std::size_t> find(const TupleClass& tuple) const;

 private:
  int tb_min_ = 0;
  int tb_top_ = 0;
  std::vector<QuotientNode> nodes_;
  std::vector<QuotientEdge> edges_;
  std::vector<std::vector<QuotientEdge>> parents_;
  std::vector<std::vector<QuotientEdge>> children_;
  std::map<Point, std::vector<std::size_t>> by_point_;
  std::map<TupleClass, std::size_t> by_tuple_;
};

// Quotient over tb_min <= tb <= spec.top_tb(). Fibers are enumerated in
// parallel when OpenMP is available; the result does not depend on the
// schedule. Throws Error{WindowEmpty} when tb_min > spec.top_tb().
QuotientPoset build_quotient(const SumSpec& spec, int tb_min);

// Single-threaded reference for build_quotient; must produce an identical
// poset.
QuotientPoset build_quotient_serial(const SumSpec& spec, int tb_min);

}  // namespace legendrian
