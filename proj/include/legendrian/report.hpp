#pragma once

// Machine-readable documents emitted by the CLI. Key order is fixed so equal
// inputs serialize to identical bytes.

#include <json.hpp>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"
#include "legendrian/paths.hpp"
#include "legendrian/poset_analysis.hpp"
#include "legendrian/simplicity.hpp"

namespace legendrian::report {

using Json = nlohmann::ordered_json;

Json point(Point p);
Json tuple(const TupleClass& t, const SumSpec& spec);
Json validation(const MountainRange& range, const ValidationReport& r);
Json range_peaks(const MountainRange& range);
Json range_valleys(const MountainRange& range);
Json sum_peaks(const SumSpec& spec);
Json quotient(const QuotientPoset& poset, const SumSpec& spec);
Json quotient_valleys(const QuotientPoset& poset, const SumSpec& spec);
Json fiber(const std::vector<FiberClass>& classes, Point p, const SumSpec& spec);
Json window(const WindowVerdict& v, const SumSpec& spec);
Json verdict(const CriterionVerdict& v, const SumSpec& spec);
Json witness(const Witness& w, const SumSpec& spec);
Json canonical(const CanonicalForm& f);
Json nonsimple(const NonsimpleReport& r);

}  // namespace legendrian::report
