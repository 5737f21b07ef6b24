#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"

namespace legendrian {

// On-disk form of one knot:
//   {"name": "A", "prime": true, "genus": 2, "peaks": [[0, -2], [0, 2]]}
// genus may be null; peaks are [tb, r] pairs in strictly ascending r.
struct KnotDocument {
  std::string name;
  bool prime = true;
  std::optional<int> genus;
  std::vector<Point> peaks;

  friend bool operator==(const KnotDocument&, const KnotDocument&) = default;
};

// Schema checks only. Throws Error{ParseError} with line and column for
// malformed JSON and Error{SchemaError} naming the offending field.
KnotDocument parse_knot_document(std::string_view text);

// parse_knot_document followed by validate_range; a range that fails
// validation raises Error{RangeInvalid} listing every violation.
KnotDocument parse_knot_file(std::string_view text);

std::string serialize_knot(const KnotDocument& doc);

MountainRange to_range(const KnotDocument& doc);
KnotDocument to_document(const MountainRange& range);

// {"summands": [{"knot": "A", "count": 2}]}
struct SumDocument {
  std::vector<std::pair<std::string, int>> summands;
};

SumDocument parse_sum_file(std::string_view text);
std::string serialize_sum(const SumDocument& doc);

// Knots by name.
class Catalog {
 public:
  void add(MountainRange range);
  // Loads every *.json knot file in the directory, in file name order.
  void load_directory(const std::filesystem::path& dir);
  const MountainRange* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, MountainRange> knots_;
};

// Throws Error{UnknownKnot} for names missing from the catalog.
SumSpec resolve(const SumDocument& doc, const Catalog& catalog);

std::string read_file(const std::filesystem::path& path);

}  // namespace legendrian
