#include "legendrian/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "legendrian/poset_analysis.hpp"

namespace legendrian {

namespace {

enum class Mark { Member, Peak, Valley };

struct Cell {
  Mark mark = Mark::Member;
  std::size_t fiber = 1;
};

struct Diagram {
  int tb_top = 0;
  int tb_min = 0;
  std::map<Point, Cell> cells;
  std::set<std::pair<Point, Point>> edges;  // parent, child
};

constexpr int kCell = 24;
constexpr int kMargin = 32;

std::string placeholder(RenderFormat format) {
  if (format == RenderFormat::Ascii) return "(empty diagram)\n";
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"160\" height=\"40\">"
         "<text x=\"8\" y=\"24\" font-family=\"monospace\" font-size=\"12\">empty diagram</text>"
         "</svg>\n";
}

char glyph(const Cell& c) {
  if (c.fiber >= 10) return '#';
  if (c.fiber >= 2) return static_cast<char>('0' + c.fiber);
  switch (c.mark) {
    case Mark::Peak: return 'P';
    case Mark::Valley: return 'V';
    case Mark::Member: return 'o';
  }
  return 'o';
}

std::string ascii(const Diagram& d) {
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& [p, c] : d.cells) {
    lo = first ? p.r : std::min(lo, p.r);
    hi = first ? p.r : std::max(hi, p.r);
    first = false;
  }
  std::size_t label = 1;
  for (int tb = d.tb_top; tb >= d.tb_min; --tb) {
    label = std::max(label, std::to_string(tb).size());
  }
  std::ostringstream os;
  for (int tb = d.tb_top; tb >= d.tb_min; --tb) {
    const auto text = std::to_string(tb);
    os << std::string(label - text.size(), ' ') << text << " |";
    for (int r = lo; r <= hi; ++r) {
      auto it = d.cells.find({tb, r});
      os << (it == d.cells.end() ? '.' : glyph(it->second));
    }
    os << '\n';
  }
  os << std::string(label, ' ') << " r=" << lo << ".." << hi << '\n';
  return os.str();
}

std::string svg(const Diagram& d) {
  int lo = d.cells.begin()->first.r;
  int hi = lo;
  for (const auto& [p, c] : d.cells) {
    lo = std::min(lo, p.r);
    hi = std::max(hi, p.r);
  }
  const int width = 2 * kMargin + (hi - lo) * kCell;
  const int height = 2 * kMargin + (d.tb_top - d.tb_min) * kCell;
  auto x = [&](int r) { return kMargin + (r - lo) * kCell; };
  auto y = [&](int tb) { return kMargin + (d.tb_top - tb) * kCell; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g class=\"edges\" stroke=\"#888\" stroke-width=\"1\">\n";
  for (const auto& [from, to] : d.edges) {
    os << "<line x1=\"" << x(from.r) << "\" y1=\"" << y(from.tb) << "\" x2=\"" << x(to.r)
       << "\" y2=\"" << y(to.tb) << "\"/>\n";
  }
  os << "</g>\n<g class=\"points\">\n";
  for (const auto& [p, c] : d.cells) {
    const char* cls = "member";
    const char* fill = "#333";
    if (c.fiber >= 2) {
      cls = "nonsimple";
      fill = "#d62728";
    } else if (c.mark == Mark::Peak) {
      cls = "peak";
      fill = "#1f77b4";
    } else if (c.mark == Mark::Valley) {
      cls = "valley";
      fill = "#2ca02c";
    }
    os << "<circle class=\"" << cls << "\" data-tb=\"" << p.tb << "\" data-r=\"" << p.r
       << "\" data-fiber=\"" << c.fiber << "\" cx=\"" << x(p.r) << "\" cy=\"" << y(p.tb)
       << "\" r=\"" << (c.fiber >= 2 ? 7 : 4) << "\" fill=\"" << fill << "\"/>\n";
    if (c.fiber >= 2) {
      os << "<text x=\"" << x(p.r) + 9 << "\" y=\"" << y(p.tb) - 6
         << "\" font-family=\"monospace\" font-size=\"11\">" << c.fiber << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string emit(const Diagram& d, RenderFormat format) {
  if (d.cells.empty()) return placeholder(format);
  return format == RenderFormat::Ascii ? ascii(d) : svg(d);
}

}  // namespace

std::string render(const MountainRange& range, int tb_min, RenderFormat format) {
  Diagram d;
  d.tb_top = range.top_tb();
  d.tb_min = tb_min;
  if (range.peaks.empty() || tb_min > d.tb_top) return placeholder(format);
  for (int tb = d.tb_top; tb >= tb_min; --tb) {
    for (const int r : level_points(range, tb)) {
      d.cells[{tb, r}] = Cell{};
      if (tb > tb_min) {
        d.edges.insert({{tb, r}, stabilize(Point{tb, r}, Sign::Minus)});
        d.edges.insert({{tb, r}, stabilize(Point{tb, r}, Sign::Plus)});
      }
    }
  }
  for (const Point p : range.peaks) d.cells[p].mark = Mark::Peak;
  for (const auto& v : valleys(range)) {
    if (v.point.tb >= tb_min) d.cells[v.point].mark = Mark::Valley;
  }
  return emit(d, format);
}

std::string render(const QuotientPoset& poset, RenderFormat format) {
  Diagram d;
  d.tb_top = poset.tb_top();
  d.tb_min = poset.tb_min();
  for (const auto& node : poset.nodes()) {
    auto& cell = d.cells[node.point];
    cell.fiber = poset.fiber_size(node.point);
  }
  for (const auto id : detect_valleys(poset)) d.cells[poset.nodes()[id].point].mark = Mark::Valley;
  for (const auto id : detect_peaks(poset)) d.cells[poset.nodes()[id].point].mark = Mark::Peak;
  for (const auto& e : poset.edges()) {
    d.edges.insert({poset.nodes()[e.from].point, poset.nodes()[e.to].point});
  }
  return emit(d, format);
}

}  // namespace legendrian
