// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runs over the grid of every sum of the catalog knots U1,
// C, A, B and A' with total multiplicity at most 3.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "legendrian/cli.hpp"
#include "legendrian/composite.hpp"
#include "legendrian/error.hpp"
#include "legendrian/io.hpp"
#include "legendrian/paths.hpp"
#include "legendrian/poset_analysis.hpp"
#include "legendrian/render.hpp"
#include "legendrian/report.hpp"
#include "legendrian/simplicity.hpp"

using namespace legendrian;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

struct GridSpec {
  std::string name;
  SumSpec spec;
};

std::vector<MountainRange> catalog_knots() {
  Catalog catalog;
  catalog.load_directory(std::string(MOUNTAIN_DATA_DIR) + "/catalog");
  std::vector<MountainRange> out;
  for (const char* name : {"U1", "C", "A", "B", "A'"}) out.push_back(*catalog.find(name));
  return out;
}

std::vector<GridSpec> build_grid(const std::vector<MountainRange>& knots) {
  std::vector<GridSpec> grid;
  std::vector<int> counts(knots.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == knots.size()) {
      std::vector<Summand> summands;
      std::string name;
      for (std::size_t k = 0; k < knots.size(); ++k) {
        if (counts[k] == 0) continue;
        summands.push_back({knots[k], counts[k]});
        if (!name.empty()) name += ",";
        name += knots[k].knot_id + ":" + std::to_string(counts[k]);
      }
      if (!summands.empty()) grid.push_back({"{" + name + "}", SumSpec(std::move(summands))});
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
    counts[i] = 0;
  };
  rec(0, 3);
  return grid;
}

std::string fmt(Point p) { return "(" + std::to_string(p.tb) + "," + std::to_string(p.r) + ")"; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_class(const std::vector<FiberClass>& classes, const TupleClass& a, const TupleClass& b) {
  for (const auto& cls : classes) {
    const bool ha = std::binary_search(cls.members.begin(), cls.members.end(), a);
    const bool hb = std::binary_search(cls.members.begin(), cls.members.end(), b);
    if (ha || hb) return ha && hb;
  }
  return false;
}

// 1. Criterion verdicts against window enumeration at depth 8.
Outcome criterion_agreement(const std::vector<GridSpec>& grid) {
  Outcome o;
  const auto t0 = Clock::now();
  int simple = 0;
  int nonsimple = 0;
  for (const auto& g : grid) {
    const auto verdict = criterion(g.spec);
    const auto q = build_quotient(g.spec, g.spec.top_tb() - 8);
    std::size_t largest = 0;
    for (const Point p : q.points()) largest = std::max(largest, q.fiber_size(p));
    const auto window = simplicity_in_window(g.spec, g.spec.top_tb() - 8);
    if (window.simple != (largest == 1)) o.fail(g.name + ": window verdict disagrees with fibers");
    if (verdict.simple) {
      ++simple;
      if (largest != 1) o.fail(g.name + ": criterion simple but a fiber has " +
                               std::to_string(largest) + " classes");
    } else {
      ++nonsimple;
      if (largest < 2) o.fail(g.name + ": criterion nonsimple but every fiber is a singleton");
      if (window.simple || !window.first || !window.second || *window.first == *window.second) {
        o.fail(g.name + ": no window witness");
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu specs, %d simple, %d nonsimple, depth 8, %.2f s",
                grid.size(), simple, nonsimple, secs);
  o.detail = buf;
  return o;
}

// 2. Peak counts: poset, tuple enumeration and closed formula.
Outcome peak_counts(const std::vector<GridSpec>& grid, const std::vector<MountainRange>& knots) {
  Outcome o;
  for (const auto& g : grid) {
    const auto q = build_quotient(g.spec, g.spec.top_tb() - 8);
    const auto detected = detect_peaks(q).size();
    const auto tuples = peaks_of_sum(g.spec).size();
    const auto formula = peak_count_formula(g.spec);
    if (detected != tuples || tuples != formula) {
      o.fail(g.name + ": detected " + std::to_string(detected) + ", tuples " +
             std::to_string(tuples) + ", formula " + std::to_string(formula));
    }
  }
  const auto& A = knots[2];
  const auto& B = knots[3];
  const std::vector<std::pair<SumSpec, std::size_t>> named{
      {SumSpec({{A, 2}}), 3}, {SumSpec({{A, 3}}), 4}, {SumSpec({{B, 2}}), 6},
      {SumSpec({{A, 1}, {B, 1}}), 6}};
  for (const auto& [spec, expected] : named) {
    const auto q = build_quotient(spec, spec.top_tb() - 8);
    if (detect_peaks(q).size() != expected || peak_count_formula(spec) != expected) {
      o.fail("named spec expected " + std::to_string(expected) + " peaks");
    }
  }
  o.detail = std::to_string(grid.size()) + " specs; {A:2}=3 {A:3}=4 {B:2}=6 {A:1,B:1}=6";
  return o;
}

// 3. Canonical forms of #^n A are in bijection with the window's classes.
Outcome canonical_bijection(const MountainRange& A) {
  Outcome o;
  std::size_t checked = 0;
  for (const int n : {2, 3}) {
    const SumSpec spec({{A, n}});
    const int floor = spec.top_tb() - 8;
    const auto q = build_quotient(spec, floor);
    std::map<std::tuple<int, int, int, int>, Point> image;
    for (const auto& node : q.nodes()) {
      const auto f = canonical_form(A, n, node.point);
      if (!f) {
        o.fail("n=" + std::to_string(n) + ": no form for node " + fmt(node.point));
        continue;
      }
      if (form_invariants(A, n, *f) != node.point) o.fail("form does not reproduce its point");
      if (!image.emplace(std::tuple{f->a, f->b, f->p, f->q}, node.point).second) {
        o.fail("n=" + std::to_string(n) + ": two classes share a canonical form");
      }
      const auto xy = xy_invariants(A, n, node.point);
      const auto v = valleys(A).front().point;
      const int r1 = A.peaks[0].r - v.r;
      const int r2 = A.peaks[1].r - v.r;
      if (xy.x != f->q * r2 - f->b || xy.y != f->p * r1 + f->a) o.fail("X/Y mismatch");
      ++checked;
    }
    // Every canonical form landing in the window is hit.
    std::size_t canonical = 0;
    for (int q_ = 0; q_ <= n; ++q_) {
      for (int a = 0; a <= 16; ++a) {
        for (int b = 0; a + b <= 16; ++b) {
          const CanonicalForm f{a, b, n - q_, q_};
          const Point p = form_invariants(A, n, f);
          if (p.tb < floor) continue;
          const auto c = canonical_form(A, n, p);
          if (!c || !(*c == f)) continue;
          ++canonical;
          if (image.count({a, b, n - q_, q_}) == 0) o.fail("canonical form missing from window");
        }
      }
    }
    if (canonical != image.size()) o.fail("form count differs from class count");
  }

  const SumSpec a2({{A, 2}});
  const std::vector<CanonicalForm> reps{{4, 0, 2, 0}, {2, 2, 1, 1}, {0, 4, 0, 2}};
  const auto fiber = enumerate_fiber(a2, {-3, 0});
  if (canonical_form(A, 2, {-3, 0}) != CanonicalForm{4, 0, 2, 0}) o.fail("(-3,0) not (4,0,2,0)");
  if (fiber.size() != 1) o.fail("(-3,0) fiber has " + std::to_string(fiber.size()) + " classes");
  const auto xy = xy_invariants(A, 2, {-3, 0});
  if (xy.x != 0 || xy.y != 0) o.fail("(-3,0) X/Y not zero");
  for (const auto& f : reps) {
    if (form_invariants(A, 2, f) != Point{-3, 0}) o.fail("representation off (-3,0)");
    if (f.q * 2 - f.b != 0 || f.p * -2 + f.a != 0) o.fail("representation X/Y not zero");
  }
  o.detail = std::to_string(checked) + " classes for n=2,3 at depth 8; (-3,0) reps share one class";
  return o;
}

// 4. Every N_max point is case1 or case2; a hand-built violation is caught.
Outcome nmax_dichotomy(const std::vector<GridSpec>& grid) {
  Outcome o;
  std::size_t posets = 0;
  std::size_t points = 0;
  std::size_t case1 = 0;
  std::size_t case2 = 0;
  for (const auto& g : grid) {
    const auto q = build_quotient(g.spec, g.spec.top_tb() - 8);
    const auto verdicts = check_nmax_dichotomy(q);
    if (criterion(g.spec).simple) {
      if (!verdicts.empty()) o.fail(g.name + ": N_max on a simple sum");
      continue;
    }
    ++posets;
    if (verdicts.empty()) o.fail(g.name + ": nonsimple with no N_max point");
    for (const auto& v : verdicts) {
      ++points;
      if (v.verdict == DichotomyCase::PeakInFiber) ++case1;
      if (v.verdict == DichotomyCase::TwoClassValley) ++case2;
      if (v.verdict == DichotomyCase::Violation) o.fail(g.name + ": violation at " + fmt(v.point));
    }
  }

  // Negative control: three classes over (-1,0) under two simple peaks.
  auto node = [](Point p, int tag) {
    TupleClass t{{p, {tag, tag}}};
    return QuotientNode{p, t, {t}};
  };
  const QuotientPoset fixture(
      -1, 0, {node({0, -1}, 0), node({0, 1}, 1), node({-1, 0}, 2), node({-1, 0}, 3),
              node({-1, 0}, 4)},
      {{0, 2, Sign::Plus}, {1, 3, Sign::Minus}, {0, 4, Sign::Plus}});
  const auto control = check_nmax_dichotomy(fixture);
  const bool flagged = control.size() == 1 && control[0].verdict == DichotomyCase::Violation;
  if (!flagged) o.fail("violating fixture not flagged");
  o.detail = std::to_string(posets) + " nonsimple posets, " + std::to_string(points) +
             " N_max points (case1 " + std::to_string(case1) + ", case2 " +
             std::to_string(case2) + "); control flagged";
  return o;
}

// 5. Bounded path search connects every equivalent pair, the paths pass the
// multi-path check, and no path joins inequivalent tuples.
Outcome path_consistency(const std::vector<GridSpec>& grid) {
  Outcome o;
  const int depth = 6;
  const int max_len = 24;
  std::size_t specs = 0;
  std::size_t equivalent = 0;
  std::size_t inequivalent = 0;
  std::size_t longest = 0;
  for (const auto& g : grid) {
    const auto& s = g.spec.summands();
    if (s.size() != 2 || s[0].count != 1 || s[1].count != 1) continue;
    ++specs;
    const auto& k1 = s[0].range;
    const auto& k2 = s[1].range;
    const int floor = g.spec.top_tb() - depth;
    const auto q = build_quotient(g.spec, floor);
    for (const Point p : q.points()) {
      const auto classes = enumerate_fiber(g.spec, p);
      std::vector<TupleClass> all;
      for (const auto& cls : classes) all.insert(all.end(), cls.members.begin(), cls.members.end());
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          const auto& from = all[i];
          const auto& to = all[j];
          const bool same = same_class(classes, from, to);
          const auto w =
              find_connecting_path(k1, from.factors[0], to.factors[0], k2, from.factors[1],
                                   to.factors[1], factor_floor(k1, k2, floor), max_len);
          if (same) {
            ++equivalent;
            if (!w) {
              o.fail(g.name + ": no path at " + fmt(p));
              continue;
            }
            longest = std::max(longest, w->size());
            const std::vector<PathWord> words{*w, reverse(*w)};
            if (!check_multipath(words, from, to, g.spec)) {
              o.fail(g.name + ": multipath check rejects " + format_word(*w));
            }
          } else {
            ++inequivalent;
            if (w) o.fail(g.name + ": path joins inequivalent tuples at " + fmt(p));
          }
        }
      }
    }
  }
  o.detail = std::to_string(specs) + " specs, " + std::to_string(equivalent) +
             " equivalent pairs connected (longest " + std::to_string(longest) + "), " +
             std::to_string(inequivalent) + " inequivalent pairs unconnected";
  return o;
}

// 6. Arithmetic and structural invariants.
Outcome structural(const std::vector<GridSpec>& grid, const std::vector<MountainRange>& knots) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checks = 0;

  auto check_range = [&](const MountainRange& range, int depth) {
    const auto report = validate_range(range);
    if (!report.valid()) {
      o.fail(range.knot_id + " invalid");
      return;
    }
    if (range.peaks.size() != valleys(range).size() + 1) o.fail(range.knot_id + ": peak/valley");
    const int parity = (range.peaks[0].tb + range.peaks[0].r) & 1;
    for (int tb = range.top_tb(); tb >= range.top_tb() - depth; --tb) {
      for (const int r : level_points(range, tb)) {
        const Point p{tb, r};
        ++checks;
        if (((tb + r) & 1) != parity) o.fail(range.knot_id + ": parity at " + fmt(p));
        for (const Sign s : {Sign::Plus, Sign::Minus}) {
          const Point c = stabilize(p, s);
          if (!is_member(range, c)) o.fail(range.knot_id + ": cone not closed at " + fmt(p));
          if (destabilize(range, c, s) != p) o.fail(range.knot_id + ": destab(stab) != id");
        }
        const Point pm = stabilize(stabilize(p, Sign::Plus), Sign::Minus);
        const Point mp = stabilize(stabilize(p, Sign::Minus), Sign::Plus);
        if (pm != mp) o.fail("stabilizations do not commute");
        if (range.genus && tb + std::abs(r) > 2 * *range.genus - 1) {
          o.fail(range.knot_id + ": Bennequin bound fails at " + fmt(p));
        }
      }
    }
  };
  for (const auto& k : knots) check_range(k, 10);

  // Random valid ranges, genus chosen just large enough.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> npeaks(1, 4);
  std::uniform_int_distribution<int> gap(1, 4);
  std::uniform_int_distribution<int> height(-3, 3);
  int made = 0;
  for (int trial = 0; made < 200 && trial < 5000; ++trial) {
    MountainRange range{"R" + std::to_string(trial), {}, std::nullopt, true};
    int r = height(rng);
    const int count = npeaks(rng);
    for (int i = 0; i < count; ++i) {
      int tb = height(rng);
      if ((tb + r) % 2 != 0) ++tb;
      range.peaks.push_back({tb, r});
      r += 2 * gap(rng);
    }
    if (!validate_range(range).valid()) continue;
    int need = 0;
    for (const Point p : range.peaks) need = std::max(need, (p.tb + std::abs(p.r) + 2) / 2);
    range.genus = need;
    if (!validate_range(range).valid()) o.fail("genus bound rejected a valid range");
    ++made;
    check_range(range, 6);
  }

  // Sum-level invariants on every grid quotient.
  for (const auto& g : grid) {
    const auto q = build_quotient(g.spec, g.spec.top_tb() - 5);
    if (!stabilizations_commute(q)) o.fail(g.name + ": quotient stabilizations do not commute");
    const int parity = (q.nodes().front().point.tb + q.nodes().front().point.r) & 1;
    for (std::size_t id = 0; id < q.nodes().size(); ++id) {
      const auto& node = q.nodes()[id];
      ++checks;
      if (((node.point.tb + node.point.r) & 1) != parity) o.fail(g.name + ": parity");
      for (const auto& m : node.members) {
        int tb = g.spec.total() - 1;
        int r = 0;
        for (const Point f : m.factors) {
          tb += f.tb;
          r += f.r;
        }
        if (Point{tb, r} != node.point) o.fail(g.name + ": tb/r not additive");
        for (const auto& nb : relation_neighbors(m, g.spec)) {
          if (sum_invariants(nb) != node.point) o.fail(g.name + ": generator moved (tb,r)");
          if (!std::binary_search(node.members.begin(), node.members.end(), nb)) {
            o.fail(g.name + ": generator left the class");
          }
        }
      }
      for (const auto& e : q.children(id)) {
        if (q.nodes()[e.to].point != stabilize(node.point, e.sign)) o.fail("edge off lattice");
      }
    }
  }

  // Invalid inputs never reach the simplicity machinery.
  bool rejected = false;
  try {
    SumSpec({{MountainRange{"X", {{0, 0}, {-1, 1}}, std::nullopt, true}, 1}});
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::InvalidSummand;
  }
  if (!rejected) o.fail("invalid range accepted into a sum");

  const double secs = seconds_since(t0);
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu lattice checks, %d random ranges, %.2f s", checks, made,
                secs);
  o.detail = buf;
  return o;
}

// 7. Reports and renders are byte-identical across runs and builders.
Outcome determinism(const std::vector<GridSpec>& grid) {
  Outcome o;
  std::size_t documents = 0;
  auto documents_of = [](const GridSpec& g, const QuotientPoset& q) {
    std::vector<std::string> out;
    out.push_back(report::quotient(q, g.spec).dump(2));
    out.push_back(report::quotient_valleys(q, g.spec).dump(2));
    out.push_back(report::nonsimple(analyze_nonsimple(q)).dump(2));
    out.push_back(render(q, RenderFormat::Ascii));
    out.push_back(render(q, RenderFormat::Svg));
    out.push_back(report::window(simplicity_in_window(g.spec, q.tb_min()), g.spec).dump(2));
    out.push_back(report::verdict(criterion(g.spec), g.spec).dump(2));
    return out;
  };
  for (const auto& g : grid) {
    const int floor = g.spec.top_tb() - 8;
    const auto first = documents_of(g, build_quotient(g.spec, floor));
    const auto second = documents_of(g, build_quotient(g.spec, floor));
    const auto serial = documents_of(g, build_quotient_serial(g.spec, floor));
    documents += first.size();
    if (first != second) o.fail(g.name + ": repeated parallel runs differ");
    if (first != serial) o.fail(g.name + ": parallel and serial builds differ");
  }

  // Whole CLI invocations over the shipped sum files.
  const std::string sums = std::string(MOUNTAIN_DATA_DIR) + "/sums/";
  for (const char* file : {"A2.json", "B2.json", "A_C.json", "A_Ashifted.json"}) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"sum", "--format", "json"},
          std::vector<std::string>{"render", "--render", "svg"},
          std::vector<std::string>{"simple", "--format", "json"}}) {
      auto full = args;
      full.insert(full.end(), {"--spec", sums + file});
      const auto a = cli::run_command(full);
      const auto b = cli::run_command(full);
      ++documents;
      if (a.exit_code != 0 || a.out != b.out) o.fail(std::string(file) + ": CLI output differs");
    }
  }
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  o.detail = std::to_string(documents) + " documents compared, " + std::to_string(threads) +
             " OpenMP threads";
  return o;
}

}  // namespace

int main() {
#ifdef _OPENMP
  // Oversubscribe so the dynamic schedule actually interleaves.
  if (omp_get_max_threads() < 4) omp_set_num_threads(4);
#endif
  const auto knots = catalog_knots();
  const auto grid = build_grid(knots);

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"criterion-oracle agreement", [&] { return criterion_agreement(grid); }},
      {"peak counts", [&] { return peak_counts(grid, knots); }},
      {"canonical-form bijection", [&] { return canonical_bijection(knots[2]); }},
      {"N_max dichotomy", [&] { return nmax_dichotomy(grid); }},
      {"path-oracle consistency", [&] { return path_consistency(grid); }},
      {"arithmetic and structural invariants", [&] { return structural(grid, knots); }},
      {"determinism", [&] { return determinism(grid); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].title,
                out.detail.c_str());
    for (const auto& why : out.failures) std::printf("    %s\n", why.c_str());
    if (!out.pass) ++failed;
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
