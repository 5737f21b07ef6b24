#include <cstddef>
#include <vector>

#include "legendrian/composite.hpp"
#include "quotient_kernels.hpp"

namespace legendrian {

QuotientPoset build_quotient(const SumSpec& spec, int tb_min) {
  detail::check_window(spec, tb_min);
  const auto points = detail::window_points(spec, tb_min);
  const auto count = static_cast<std::ptrdiff_t>(points.size());

  std::vector<std::vector<FiberClass>> fibers(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    fibers[static_cast<std::size_t>(i)] = enumerate_fiber(spec, points[static_cast<std::size_t>(i)]);
  }

  auto nodes = detail::assemble_nodes(points, std::move(fibers));
  const auto index = detail::index_members(nodes);
  const auto node_count = static_cast<std::ptrdiff_t>(nodes.size());

  std::vector<std::vector<QuotientEdge>> per_node(nodes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t id = 0; id < node_count; ++id) {
    per_node[static_cast<std::size_t>(id)] =
        detail::node_edges(spec, nodes, static_cast<std::size_t>(id), tb_min, index);
  }

  std::vector<QuotientEdge> edges;
  for (auto& list : per_node) edges.insert(edges.end(), list.begin(), list.end());
  return QuotientPoset(tb_min, spec.top_tb(), std::move(nodes), std::move(edges));
}

}  // namespace legendrian
