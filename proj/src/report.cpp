#include "legendrian/report.hpp"

namespace legendrian::report {

Json point(Point p) { return Json::array({p.tb, p.r}); }

Json tuple(const TupleClass& t, const SumSpec& spec) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    Json f;
    f["knot"] = spec.range_at(i).knot_id;
    f["tb"] = t.factors[i].tb;
    f["r"] = t.factors[i].r;
    out.push_back(f);
  }
  return out;
}

Json validation(const MountainRange& range, const ValidationReport& r) {
  Json out;
  out["knot"] = range.knot_id;
  out["valid"] = r.valid();
  Json issues = Json::array();
  for (const auto& issue : r.issues) {
    Json i;
    i["kind"] = to_string(issue.kind);
    i["message"] = issue.message;
    issues.push_back(i);
  }
  out["issues"] = issues;
  return out;
}

Json range_peaks(const MountainRange& range) {
  Json out;
  out["knot"] = range.knot_id;
  Json peaks = Json::array();
  for (const Point p : range.peaks) peaks.push_back(point(p));
  out["peaks"] = peaks;
  out["count"] = range.peaks.size();
  return out;
}

Json range_valleys(const MountainRange& range) {
  Json out;
  out["knot"] = range.knot_id;
  Json list = Json::array();
  for (const auto& v : valleys(range)) {
    Json item;
    item["point"] = point(v.point);
    item["left_peak"] = v.left_peak;
    item["right_peak"] = v.right_peak;
    list.push_back(item);
  }
  out["valleys"] = list;
  return out;
}

Json sum_peaks(const SumSpec& spec) {
  Json out;
  Json list = Json::array();
  for (const auto& p : peaks_of_sum(spec)) {
    Json item;
    item["point"] = point(p.point);
    item["tuple"] = tuple(p.tuple, spec);
    list.push_back(item);
  }
  out["count"] = list.size();
  out["formula"] = peak_count_formula(spec);
  out["peaks"] = list;
  return out;
}

Json quotient(const QuotientPoset& poset, const SumSpec& spec) {
  Json out;
  out["tb_min"] = poset.tb_min();
  out["tb_top"] = poset.tb_top();
  Json nodes = Json::array();
  for (std::size_t id = 0; id < poset.nodes().size(); ++id) {
    const auto& node = poset.nodes()[id];
    Json n;
    n["id"] = id;
    n["point"] = point(node.point);
    n["fiber_size"] = poset.fiber_size(node.point);
    n["members"] = node.members.size();
    n["representative"] = tuple(node.representative, spec);
    nodes.push_back(n);
  }
  out["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : poset.edges()) {
    edges.push_back(Json::array({e.from, e.to, std::string(1, sign_char(e.sign))}));
  }
  out["edges"] = edges;
  Json peaks = Json::array();
  for (const auto id : detect_peaks(poset)) peaks.push_back(id);
  out["peaks"] = peaks;
  Json valleys = Json::array();
  for (const auto id : detect_valleys(poset)) valleys.push_back(id);
  out["valleys"] = valleys;
  return out;
}

Json quotient_valleys(const QuotientPoset& poset, const SumSpec& spec) {
  Json out;
  out["tb_min"] = poset.tb_min();
  Json list = Json::array();
  for (const auto id : detect_valleys(poset)) {
    Json item;
    item["id"] = id;
    item["point"] = point(poset.nodes()[id].point);
    item["representative"] = tuple(poset.nodes()[id].representative, spec);
    list.push_back(item);
  }
  out["valleys"] = list;
  return out;
}

Json fiber(const std::vector<FiberClass>& classes, Point p, const SumSpec& spec) {
  Json out;
  out["point"] = point(p);
  out["class_count"] = classes.size();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json item;
    item["representative"] = tuple(c.representative(), spec);
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(tuple(m, spec));
    item["members"] = members;
    list.push_back(item);
  }
  out["classes"] = list;
  return out;
}

Json window(const WindowVerdict& v, const SumSpec& spec) {
  Json out;
  out["tb_min"] = v.tb_min;
  out["tb_top"] = spec.top_tb();
  out["window_verdict"] = v.simple ? "simple-in-window" : "nonsimple";
  if (!v.simple) {
    out["point"] = point(*v.point);
    out["first"] = tuple(*v.first, spec);
    out["second"] = tuple(*v.second, spec);
  }
  return out;
}

Json verdict(const CriterionVerdict& v, const SumSpec& spec) {
  Json out;
  out["simple"] = v.simple;
  out["matched_case"] = to_string(v.matched_case);
  Json counts = Json::array();
  for (std::size_t s = 0; s < v.peak_counts.size(); ++s) {
    Json c;
    c["knot"] = spec.summands()[s].range.knot_id;
    c["count"] = spec.summands()[s].count;
    c["peaks"] = v.peak_counts[s];
    counts.push_back(c);
  }
  out["summands"] = counts;
  return out;
}

Json witness(const Witness& w, const SumSpec& spec) {
  Json out;
  out["point"] = point(w.point);
  out["first"] = tuple(w.first, spec);
  out["second"] = tuple(w.second, spec);
  return out;
}

Json canonical(const CanonicalForm& f) {
  Json out;
  out["a"] = f.a;
  out["b"] = f.b;
  out["p"] = f.p;
  out["q"] = f.q;
  return out;
}

Json nonsimple(const NonsimpleReport& r) {
  Json out;
  Json points = Json::array();
  for (const auto& p : r.nonsimple) {
    Json item;
    item["point"] = point(p.point);
    item["fiber_size"] = p.fiber_size;
    points.push_back(item);
  }
  out["nonsimple"] = points;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json item;
    item["point"] = point(v.point);
    item["fiber_size"] = v.fiber_size;
    item["verdict"] = to_string(v.verdict);
    verdicts.push_back(item);
  }
  out["nmax"] = verdicts;
  return out;
}

}  // namespace legendrian::report
