#include "stripstar/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <type_traits>

namespace stripstar {

namespace {

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json series_to_json(const TruncatedSeries& series) {
  Json coeffs = Json::array();
  for (const Complex& c : series.coeffs()) coeffs.push_back(complex_to_json(c));
  return Json{{"order", series.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument(
        "series document needs \"order\" and \"coeffs\"");
  }
  if (!j["order"].is_number_integer()) {
    throw std::invalid_argument("\"order\" must be an integer");
  }
  const long long order = j["order"].get<long long>();
  const Json& coeffs = j["coeffs"];
  if (order < 0 || !coeffs.is_array() ||
      coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument(
        "\"coeffs\" must hold exactly order + 1 entries");
  }
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const Json& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw std::invalid_argument("coefficients must be [re, im] pairs");
    }
    c.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return TruncatedSeries(std::move(c));
}

Json normalized_to_json(const NormalizedFunction& f) {
  Json j = series_to_json(f.series());
  j["kind"] = "normalized";
  return j;
}

NormalizedFunction normalized_from_json(const Json& j) {
  if (j.contains("kind") && j["kind"] != "normalized") {
    throw std::invalid_argument("document kind is not \"normalized\"");
  }
  return NormalizedFunction(series_from_json(j));
}

SchwarzFunction schwarz_from_json(const Json& j) {
  return SchwarzFunction(series_from_json(j));
}

Json predicate_to_json(const RegionPredicate& predicate) {
  return std::visit(
      [](const auto& region) -> Json {
        using T = std::decay_t<decltype(region)>;
        if constexpr (std::is_same_v<T, StripRegion>) {
          return Json{{"tag", "strip"}, {"alpha", region.alpha.radians()}};
        } else if constexpr (std::is_same_v<T, StarlikeRegion>) {
          return Json{{"tag", "starlike"}, {"beta", region.beta}};
        } else if constexpr (std::is_same_v<T, StronglyStarlikeRegion>) {
          return Json{{"tag", "strongly_starlike"}, {"gamma", region.gamma}};
        } else if constexpr (std::is_same_v<T, ParabolicRegion>) {
          return Json{{"tag", "parabolic"}};
        } else {
          return Json{{"tag", "lemniscate"}};
        }
      },
      predicate);
}

Json membership_report_to_json(const MembershipReport& report) {
  return Json{{"predicate", predicate_to_json(report.predicate)},
              {"r", report.radius},
              {"samples", report.samples},
              {"worst_margin", report.worst_margin},
              {"witness", complex_to_json(report.witness)}};
}

Json radius_result_to_json(const RadiusResult& result) {
  const char* kind = nullptr;
  switch (result.problem.target) {
    case TargetClass::StronglyStarlike: kind = "ss"; break;
    case TargetClass::Parabolic: kind = "ps"; break;
    case TargetClass::Lemniscate: kind = "sl"; break;
  }
  Json roots = Json::object();
  if (result.upper_corner_root) {
    roots["upper_corner"] = *result.upper_corner_root;
    roots["lower_corner"] = *result.lower_corner_root;
  } else {
    roots[kind] = result.radius;
  }
  Json gamma;
  if (result.problem.gamma) gamma = *result.problem.gamma;
  return Json{{"kind", kind},
              {"alpha", result.problem.alpha.radians()},
              {"gamma", std::move(gamma)},
              {"radius", result.radius},
              {"roots", std::move(roots)},
              {"iterations", result.evaluations}};
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return std::strtod(buffer, nullptr);
}

void round_numbers(Json& j, int digits) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>(), digits);
  } else if (j.is_array() || j.is_object()) {
    for (Json& child : j) round_numbers(child, digits);
  }
}

std::string format_significant(double x, int digits) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return buffer;
}

}  // namespace stripstar
