#include <vector>

#include "legendrian/composite.hpp"
#include "quotient_kernels.hpp"

namespace legendrian {

QuotientPoset build_quotient_serial(const SumSpec& spec, int tb_min) {
  detail::check_window(spec, tb_min);
  const auto points = detail::window_points(spec, tb_min);

  std::vector<std::vector<FiberClass>> fibers;
  fibers.reserve(points.size());
  for (const Point p : points) fibers.push_back(enumerate_fiber(spec, p));

  auto nodes = detail::assemble_nodes(points, std::move(fibers));
  const auto index = detail::index_members(nodes);

  std::vector<QuotientEdge> edges;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto list = detail::node_edges(spec, nodes, id, tb_min, index);
    edges.insert(edges.end(), list.begin(), list.end());
  }
  return QuotientPoset(tb_min, spec.top_tb(), std::move(nodes), std::move(edges));
}

}  // namespace legendrian
