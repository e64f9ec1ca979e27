#pragma once

#include <string>

#include <json.hpp>

#include "stripstar/function_factory.hpp"
#include "stripstar/membership.hpp"
#include "stripstar/radius_solver.hpp"

namespace stripstar {

using Json = nlohmann::json;

/// Interchange schema for series: {"order": N, "coeffs": [[re, im], ...]}
/// with exactly N + 1 coefficient pairs.
Json series_to_json(const TruncatedSeries& series);
TruncatedSeries series_from_json(const Json& j);

/// Same schema plus a "kind": "normalized" tag.
Json normalized_to_json(const NormalizedFunction& f);
NormalizedFunction normalized_from_json(const Json& j);

/// Reads a Schwarz polynomial from the plain series schema (extra fields
/// are ignored); the usual construction checks apply.
SchwarzFunction schwarz_from_json(const Json& j);

Json predicate_to_json(const RegionPredicate& predicate);

Json membership_report_to_json(const MembershipReport& report);

Json radius_result_to_json(const RadiusResult& result);

/// Rounds to at most `digits` significant decimal digits; the shortest
/// representation of the result round-trips within that budget, which keeps
/// printed output byte-stable.
double round_significant(double x, int digits = 12);

/// Applies round_significant to every number in the document, in place.
void round_numbers(Json& j, int digits = 12);

/// %.*g formatting with the same digit budget, for CSV output.
std::string format_significant(double x, int digits = 12);

}  // namespace stripstar
