#include "legendrian/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "legendrian/error.hpp"
#include "legendrian/io.hpp"
#include "legendrian/render.hpp"
#include "legendrian/report.hpp"

#ifndef MOUNTAIN_CATALOG_DIR
#define MOUNTAIN_CATALOG_DIR "data/catalog"
#endif

namespace legendrian::cli {

namespace {

using report::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A command that produced its document but must exit with a domain failure.
class FailedReport : public std::runtime_error {
 public:
  FailedReport(std::string output, const std::string& what)
      : std::runtime_error(what), output(std::move(output)) {}

  std::string output;
};

struct Options {
  std::string spec;
  std::vector<std::string> knots;
  std::string catalog = MOUNTAIN_CATALOG_DIR;
  std::optional<int> tb;
  std::optional<int> r;
  std::optional<int> tb_min;
  std::optional<int> n;
  std::optional<int> max_len;
  std::optional<int> tb_floor;
  int depth = 8;
  std::string format = "text";
  std::string render = "ascii";
  std::string out;
  std::string start;
  std::string end;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt_point(Point p) {
  return "(" + std::to_string(p.tb) + "," + std::to_string(p.r) + ")";
}

std::string fmt_tuple(const TupleClass& t, const SumSpec& spec) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i > 0) s += ", ";
    s += fmt_point(t.factors[i]) + "@" + spec.range_at(i).knot_id;
  }
  return s + "]";
}

Catalog load_catalog(const Options& o) {
  Catalog catalog;
  if (!o.catalog.empty() && std::filesystem::is_directory(o.catalog)) {
    catalog.load_directory(o.catalog);
  }
  for (const auto& path : o.knots) {
    if (std::filesystem::exists(path) || catalog.find(path) == nullptr) {
      catalog.add(to_range(parse_knot_file(read_file(path))));
    }
  }
  return catalog;
}

SumSpec load_spec(const Options& o) {
  if (o.spec.empty()) throw UsageError("--spec is required");
  return resolve(parse_sum_file(read_file(o.spec)), load_catalog(o));
}

MountainRange load_first_knot(const Options& o) {
  if (o.knots.empty()) throw UsageError("--knot is required");
  const auto& arg = o.knots.front();
  // A bare catalog name is accepted when no such file exists.
  if (!std::filesystem::exists(arg)) {
    Catalog catalog;
    if (!o.catalog.empty() && std::filesystem::is_directory(o.catalog)) {
      catalog.load_directory(o.catalog);
    }
    if (const auto* range = catalog.find(arg)) return *range;
  }
  return to_range(parse_knot_file(read_file(arg)));
}

int window_floor(const Options& o, int top) { return o.tb_min ? *o.tb_min : top - o.depth; }

Point require_point(const Options& o) {
  if (!o.tb) throw UsageError("--tb is required");
  if (!o.r) throw UsageError("--r is required");
  return {*o.tb, *o.r};
}

// "tb,r;tb,r"
std::vector<Point> parse_points(const std::string& text, const char* flag) {
  std::vector<Point> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    std::stringstream one(item);
    Point p;
    char comma = 0;
    if (!(one >> p.tb >> comma >> p.r) || comma != ',') {
      throw UsageError(std::string(flag) + ": expected \"tb,r;tb,r\", got \"" + text + "\"");
    }
    out.push_back(p);
  }
  return out;
}

// Single-summand sum #^n K for the canonical-form commands.
std::pair<MountainRange, int> power_of_knot(const Options& o) {
  if (!o.spec.empty()) {
    const auto spec = load_spec(o);
    if (spec.summands().size() != 1) {
      throw Error(ErrorCode::NotApplicable, "canonical forms need a single summand #^n K");
    }
    return {spec.summands().front().range, spec.total()};
  }
  return {load_first_knot(o), o.n.value_or(1)};
}

std::string cmd_validate(const Options& o) {
  if (o.knots.empty() && o.spec.empty()) throw UsageError("--knot or --spec is required");
  Json all = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& path : o.knots) {
    const auto range = to_range(parse_knot_document(read_file(path)));
    const auto r = validate_range(range);
    ok = ok && r.valid();
    all.push_back(report::validation(range, r));
    text += range.knot_id + ": " + (r.valid() ? "valid" : "invalid") + "\n";
    for (const auto& issue : r.issues) text += "  " + issue.message + "\n";
  }
  if (!o.spec.empty()) {
    const auto spec = load_spec(o);
    text += "sum: valid (" + std::to_string(spec.total()) + " factors)\n";
  }
  if (!ok) throw FailedReport(json_output(o) ? dump(all) : text, "invalid mountain range");
  return json_output(o) ? dump(all) : text;
}

std::string cmd_render(const Options& o) {
  const auto format = o.render == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  if (!o.spec.empty()) {
    const auto spec = load_spec(o);
    const int floor = window_floor(o, spec.top_tb());
    if (floor > spec.top_tb()) return render(QuotientPoset{}, format);
    return render(build_quotient(spec, floor), format);
  }
  const auto range = load_first_knot(o);
  return render(range, window_floor(o, range.top_tb()), format);
}

std::string cmd_peaks(const Options& o) {
  if (!o.spec.empty()) {
    const auto spec = load_spec(o);
    if (json_output(o)) return dump(report::sum_peaks(spec));
    const auto peaks = peaks_of_sum(spec);
    std::string text = std::to_string(peaks.size()) + " peaks (formula " +
                       std::to_string(peak_count_formula(spec)) + ")\n";
    for (const auto& p : peaks) text += fmt_point(p.point) + " " + fmt_tuple(p.tuple, spec) + "\n";
    return text;
  }
  const auto range = load_first_knot(o);
  if (json_output(o)) return dump(report::range_peaks(range));
  std::string text;
  for (const Point p : range.peaks) text += fmt_point(p) + "\n";
  return text;
}

std::string cmd_valleys(const Options& o) {
  if (!o.spec.empty()) {
    const auto spec = load_spec(o);
    const auto poset = build_quotient(spec, window_floor(o, spec.top_tb()));
    if (json_output(o)) return dump(report::quotient_valleys(poset, spec));
    std::string text;
    for (const auto id : detect_valleys(poset)) {
      text += fmt_point(poset.nodes()[id].point) + " " +
              fmt_tuple(poset.nodes()[id].representative, spec) + "\n";
    }
    return text;
  }
  const auto range = load_first_knot(o);
  if (json_output(o)) return dump(report::range_valleys(range));
  std::string text;
  for (const auto& v : valleys(range)) text += fmt_point(v.point) + "\n";
  return text;
}

std::string cmd_sum(const Options& o) {
  const auto spec = load_spec(o);
  const auto poset = build_quotient(spec, window_floor(o, spec.top_tb()));
  if (json_output(o)) return dump(report::quotient(poset, spec));
  std::string text = "window tb " + std::to_string(poset.tb_min()) + ".." +
                     std::to_string(poset.tb_top()) + ": " +
                     std::to_string(poset.nodes().size()) + " classes, " +
                     std::to_string(poset.edges().size()) + " edges\n";
  for (std::size_t id = 0; id < poset.nodes().size(); ++id) {
    const auto& node = poset.nodes()[id];
    text += std::to_string(id) + " " + fmt_point(node.point) + " " +
            fmt_tuple(node.representative, spec);
    if (poset.fiber_size(node.point) > 1) {
      text += " fiber=" + std::to_string(poset.fiber_size(node.point));
    }
    text += "\n";
  }
  return text;
}

std::string cmd_fiber(const Options& o) {
  const auto spec = load_spec(o);
  const Point p = require_point(o);
  const auto classes = enumerate_fiber(spec, p);
  if (json_output(o)) return dump(report::fiber(classes, p, spec));
  std::string text = std::to_string(classes.size()) + " classes over " + fmt_point(p) + "\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    text += "class " + std::to_string(c) + ": " + fmt_tuple(classes[c].representative(), spec) +
            " (" + std::to_string(classes[c].members.size()) + " tuples)\n";
  }
  return text;
}

std::string cmd_simple(const Options& o) {
  const auto spec = load_spec(o);
  const auto v = simplicity_in_window(spec, window_floor(o, spec.top_tb()));
  if (json_output(o)) return dump(report::window(v, spec));
  if (v.simple) return "simple-in-window (tb >= " + std::to_string(v.tb_min) + ")\n";
  return "nonsimple at " + fmt_point(*v.point) + ": " + fmt_tuple(*v.first, spec) + " vs " +
         fmt_tuple(*v.second, spec) + "\n";
}

std::string cmd_criterion(const Options& o) {
  const auto spec = load_spec(o);
  const auto v = criterion(spec);
  if (json_output(o)) return dump(report::verdict(v, spec));
  return std::string(v.simple ? "simple" : "not simple") + " (case " +
         to_string(v.matched_case) + ")\n";
}

std::string cmd_witness(const Options& o) {
  const auto spec = load_spec(o);
  const auto w = nonsimplicity_witness(spec);
  if (json_output(o)) return dump(report::witness(w, spec));
  return "point " + fmt_point(w.point) + "\n  " + fmt_tuple(w.first, spec) + "\n  " +
         fmt_tuple(w.second, spec) + "\n";
}

// Points of the window of #^n K, for the table forms of canonical and xy.
std::vector<Point> power_points(const MountainRange& range, int n, const Options& o) {
  const SumSpec spec({Summand{range, n}});
  const auto poset = build_quotient(spec, window_floor(o, spec.top_tb()));
  return poset.points();
}

std::string cmd_canonical(const Options& o) {
  const auto [range, n] = power_of_knot(o);
  std::vector<Point> points;
  if (o.tb || o.r) {
    points.push_back(require_point(o));
  } else {
    points = power_points(range, n, o);
  }
  Json rows = Json::array();
  std::string text;
  for (const Point p : points) {
    const auto form = canonical_form(range, n, p);
    Json row;
    row["point"] = report::point(p);
    row["form"] = form ? report::canonical(*form) : Json(nullptr);
    rows.push_back(row);
    text += fmt_point(p) + " ";
    if (form) {
      text += "L(" + std::to_string(form->a) + "," + std::to_string(form->b) + "," +
              std::to_string(form->p) + "," + std::to_string(form->q) + ")\n";
    } else {
      text += "not a class\n";
    }
  }
  return json_output(o) ? dump(rows) : text;
}

std::string cmd_xy(const Options& o) {
  const auto [range, n] = power_of_knot(o);
  std::vector<Point> points;
  if (o.tb || o.r) {
    points.push_back(require_point(o));
  } else {
    points = power_points(range, n, o);
  }
  Json rows = Json::array();
  std::string text;
  for (const Point p : points) {
    const auto xy = xy_invariants(range, n, p);
    Json row;
    row["point"] = report::point(p);
    row["X"] = xy.x;
    row["Y"] = xy.y;
    rows.push_back(row);
    text += fmt_point(p) + " X=" + std::to_string(xy.x) + " Y=" + std::to_string(xy.y) + "\n";
  }
  return json_output(o) ? dump(rows) : text;
}

std::string cmd_path_search(const Options& o) {
  const auto spec = load_spec(o);
  if (spec.summands().size() != 2 || spec.total() != 2) {
    throw Error(ErrorCode::NotApplicable,
                "path-search needs two distinct summands with count 1");
  }
  if (o.start.empty() || o.end.empty()) throw UsageError("--start and --end are required");
  const auto from = parse_points(o.start, "--start");
  const auto to = parse_points(o.end, "--end");
  if (from.size() != 2 || to.size() != 2) {
    throw UsageError("--start/--end need two points \"tb,r;tb,r\"");
  }
  const auto& k1 = spec.summands()[0].range;
  const auto& k2 = spec.summands()[1].range;
  for (const auto& [range, p] : {std::pair{&k1, from[0]}, std::pair{&k2, from[1]},
                                 std::pair{&k1, to[0]}, std::pair{&k2, to[1]}}) {
    if (!is_member(*range, p)) {
      throw Error(ErrorCode::RangeInvalid,
                  fmt_point(p) + " is not a class of knot '" + range->knot_id + "'");
    }
  }
  const int floor =
      o.tb_floor ? *o.tb_floor : factor_floor(k1, k2, window_floor(o, spec.top_tb()));
  const int max_len = o.max_len ? *o.max_len : 4 * o.depth;
  const auto word = find_connecting_path(k1, from[0], to[0], k2, from[1], to[1], floor, max_len);
  if (json_output(o)) {
    Json out;
    out["found"] = word.has_value();
    out["word"] = word ? Json(format_word(*word)) : Json(nullptr);
    out["reverse"] = word ? Json(format_word(reverse(*word))) : Json(nullptr);
    out["length"] = word ? Json(word->size()) : Json(nullptr);
    out["tb_floor"] = floor;
    out["max_len"] = max_len;
    return dump(out);
  }
  if (!word) {
    return "no path within length " + std::to_string(max_len) + " above tb " +
           std::to_string(floor) + " (not a proof of distinctness)\n";
  }
  return "path: " + (word->empty() ? std::string("(empty)") : format_word(*word)) +
         "\nreverse: " + (word->empty() ? std::string("(empty)") : format_word(reverse(*word))) +
         "\n";
}

std::string cmd_nmax(const Options& o) {
  const auto spec = load_spec(o);
  const auto poset = build_quotient(spec, window_floor(o, spec.top_tb()));
  const auto r = analyze_nonsimple(poset);
  if (json_output(o)) return dump(report::nonsimple(r));
  if (r.verdicts.empty()) return "no nonsimple points in window\n";
  std::string text;
  for (const auto& v : r.verdicts) {
    text += fmt_point(v.point) + " fiber=" + std::to_string(v.fiber_size) + " " +
            to_string(v.verdict) + "\n";
  }
  return text;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Combinatorics of Legendrian mountain ranges and their connected sums", "mountain"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--spec", o.spec, "Sum specification file");
  app.add_option("--knot", o.knots, "Knot document (repeatable)");
  app.add_option("--catalog", o.catalog, "Directory of knot documents")->capture_default_str();
  app.add_option("--tb", o.tb, "Thurston-Bennequin number");
  app.add_option("--r", o.r, "Rotation number");
  app.add_option("--tb-min", o.tb_min, "Window floor");
  app.add_option("--depth", o.depth, "Window depth below the top level")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--n", o.n, "Number of copies for --knot in canonical/xy")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-len", o.max_len, "Path search length bound")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tb-floor", o.tb_floor, "Lowest factor tb visited by path search");
  app.add_option("--start", o.start, "Start factors \"tb,r;tb,r\"");
  app.add_option("--end", o.end, "End factors \"tb,r;tb,r\"");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--render", o.render, "Diagram format")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output here instead of stdout");

  struct Command {
    const char* name;
    const char* help;
    std::function<std::string(const Options&)> run;
  };
  const std::vector<Command> commands{
      {"validate", "Check knot documents", cmd_validate},
      {"render", "Draw a range or a sum's quotient", cmd_render},
      {"peaks", "Peaks of a range or a sum", cmd_peaks},
      {"valleys", "Valleys of a range or a sum's quotient", cmd_valleys},
      {"sum", "Build the quotient poset of a sum", cmd_sum},
      {"fiber", "Classes over one (tb, r) point", cmd_fiber},
      {"simple", "Simplicity by enumeration in the window", cmd_simple},
      {"criterion", "Simplicity from peak counts", cmd_criterion},
      {"witness", "Two inequivalent classes of a nonsimple sum", cmd_witness},
      {"canonical", "Canonical forms for powers of a two-peak knot", cmd_canonical},
      {"xy", "X/Y invariants for powers of a two-peak knot", cmd_xy},
      {"path-search", "Connecting path between two tuples", cmd_path_search},
      {"nmax", "Maximal nonsimple points and their dichotomy case", cmd_nmax},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help);

  CommandResult result;
  std::vector<std::string> storage{"mountain"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  }

  const auto* chosen = app.get_subcommands().front();
  auto emit = [&](std::string output) {
    if (o.out.empty()) {
      result.out = std::move(output);
      return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
    file << output;
  };
  try {
    for (const auto& c : commands) {
      if (chosen->get_name() == c.name) emit(c.run(o));
    }
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const FailedReport& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
    try {
      emit(e.output);
    } catch (const Error&) {
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + std::string(to_string(e.code())) + ": " + e.what() + "\n";
  }
  return result;
}

}  // namespace legendrian::cli
