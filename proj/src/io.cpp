#include "legendrian/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Locate the byte offset reported by the parser.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": malformed JSON");
  }
}

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaError, "field '" + field + "': " + what);
}

void require_fields(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return item.key() == a; });
    if (!known) schema_error(where + item.key(), "not part of the schema");
  }
  for (const char* name : allowed) {
    if (!obj.contains(name)) schema_error(where + name, "missing");
  }
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) schema_error(field, "expected an integer");
  const auto wide = v.get<long long>();
  if (wide < -1'000'000 || wide > 1'000'000) schema_error(field, "out of range");
  return static_cast<int>(wide);
}

}  // namespace

KnotDocument parse_knot_document(std::string_view text) {
  const json root = parse_json(text);
  require_fields(root, "", {"name", "prime", "genus", "peaks"});
  KnotDocument doc;
  if (!root["name"].is_string()) schema_error("name", "expected a string");
  doc.name = root["name"].get<std::string>();
  if (doc.name.empty()) schema_error("name", "must not be empty");
  if (!root["prime"].is_boolean()) schema_error("prime", "expected a boolean");
  doc.prime = root["prime"].get<bool>();
  if (!root["genus"].is_null()) {
    doc.genus = as_int(root["genus"], "genus");
    if (*doc.genus < 0) schema_error("genus", "must be non-negative");
  }
  const json& peaks = root["peaks"];
  if (!peaks.is_array() || peaks.empty()) schema_error("peaks", "expected a non-empty array");
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const std::string field = "peaks[" + std::to_string(i) + "]";
    const json& pair = peaks[i];
    if (!pair.is_array() || pair.size() != 2) schema_error(field, "expected [tb, r]");
    const Point p{as_int(pair[0], field + "[0]"), as_int(pair[1], field + "[1]")};
    if (!doc.peaks.empty() && p.r <= doc.peaks.back().r) {
      schema_error(field, "r must be strictly greater than the previous peak's r");
    }
    doc.peaks.push_back(p);
  }
  return doc;
}

KnotDocument parse_knot_file(std::string_view text) {
  auto doc = parse_knot_document(text);
  const auto report = validate_range(to_range(doc));
  if (!report.valid()) {
    std::string msg = "knot '" + doc.name + "' is not a valid mountain range:";
    for (const auto& issue : report.issues) msg += "\n  " + issue.message;
    throw Error(ErrorCode::RangeInvalid, msg);
  }
  return doc;
}

std::string serialize_knot(const KnotDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(doc.name).dump() << ",\n";
  os << "  \"prime\": " << (doc.prime ? "true" : "false") << ",\n";
  os << "  \"genus\": ";
  if (doc.genus) {
    os << *doc.genus;
  } else {
    os << "null";
  }
  os << ",\n  \"peaks\": [";
  for (std::size_t i = 0; i < doc.peaks.size(); ++i) {
    if (i > 0) os << ", ";
    os << '[' << doc.peaks[i].tb << ", " << doc.peaks[i].r << ']';
  }
  os << "]\n}\n";
  return os.str();
}

MountainRange to_range(const KnotDocument& doc) {
  return MountainRange{doc.name, doc.peaks, doc.genus, doc.prime};
}

KnotDocument to_document(const MountainRange& range) {
  return KnotDocument{range.knot_id, range.prime, range.genus, range.peaks};
}

SumDocument parse_sum_file(std::string_view text) {
  const json root = parse_json(text);
  require_fields(root, "", {"summands"});
  const json& list = root["summands"];
  if (!list.is_array() || list.empty()) schema_error("summands", "expected a non-empty array");
  SumDocument doc;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "summands[" + std::to_string(i) + "].";
    require_fields(list[i], field, {"knot", "count"});
    if (!list[i]["knot"].is_string()) schema_error(field + "knot", "expected a string");
    const int count = as_int(list[i]["count"], field + "count");
    if (count < 1) schema_error(field + "count", "must be at least 1");
    doc.summands.emplace_back(list[i]["knot"].get<std::string>(), count);
  }
  return doc;
}

std::string serialize_sum(const SumDocument& doc) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& [knot, count] : doc.summands) {
    nlohmann::ordered_json item;
    item["knot"] = knot;
    item["count"] = count;
    list.push_back(item);
  }
  nlohmann::ordered_json root;
  root["summands"] = list;
  return root.dump() + "\n";
}

void Catalog::add(MountainRange range) {
  auto name = range.knot_id;
  knots_.insert_or_assign(std::move(name), std::move(range));
}

void Catalog::load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) add(to_range(parse_knot_file(read_file(f))));
}

const MountainRange* Catalog::find(const std::string& name) const {
  auto it = knots_.find(name);
  return it == knots_.end() ? nullptr : &it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, range] : knots_) out.push_back(name);
  return out;
}

SumSpec resolve(const SumDocument& doc, const Catalog& catalog) {
  std::vector<Summand> summands;
  for (const auto& [knot, count] : doc.summands) {
    const auto* range = catalog.find(knot);
    if (range == nullptr) throw Error(ErrorCode::UnknownKnot, "unknown knot '" + knot + "'");
    summands.push_back({*range, count});
  }
  return SumSpec(std::move(summands));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace legendrian
