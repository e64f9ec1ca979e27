// stripstar command-line tool: inclusion radii, member construction,
// membership reports, envelope numbers, and boundary-curve export for the
// vertical-strip starlike class.

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stripstar/errors.hpp"
#include "stripstar/json_io.hpp"

namespace {

using namespace stripstar;

constexpr double kPi = std::numbers::pi;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Reference inclusion radii for alpha = pi/2 (strongly starlike of order 1/2,
// parabolic, lemniscate) and the tolerance for the matches_paper flag.
constexpr double kReferenceSS = 0.493918;
constexpr double kReferencePS = 0.421547;
constexpr double kReferenceSL = 0.304506;
constexpr double kReferenceTolerance = 1e-4;

// Accepts plain radians ("2.2") or multiples of pi ("pi", "pi/2", "2pi/3",
// "0.75pi").
double parse_angle(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([0-9]*\.?[0-9]+)?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)",
      std::regex::icase);
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double numerator = m[1].matched ? std::stod(m[1].str()) : 1.0;
    const double denominator = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (denominator == 0.0) {
      throw std::invalid_argument("zero denominator in angle: " + text);
    }
    return numerator * kPi / denominator;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle: " + text);
  }
  if (used != text.size()) {
    throw std::invalid_argument("cannot parse angle: " + text);
  }
  return value;
}

// "strip:pi/2", "starlike:0.25", "strongly_starlike:0.5" (alias ss),
// "parabolic" (alias ps), "lemniscate" (alias sl).
RegionPredicate parse_predicate(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const std::string param =
      has_param ? text.substr(colon + 1) : std::string();

  auto param_value = [&]() {
    if (!has_param || param.empty()) {
      throw std::invalid_argument("predicate \"" + name +
                                  "\" needs a parameter, e.g. " + name +
                                  ":0.5");
    }
    return param;
  };

  if (name == "strip") return StripRegion{Alpha(parse_angle(param_value()))};
  if (name == "starlike") return StarlikeRegion(std::stod(param_value()));
  if (name == "strongly_starlike" || name == "ss") {
    return StronglyStarlikeRegion(std::stod(param_value()));
  }
  if (name == "parabolic" || name == "ps") {
    if (has_param) throw std::invalid_argument("parabolic takes no parameter");
    return ParabolicRegion{};
  }
  if (name == "lemniscate" || name == "sl") {
    if (has_param) throw std::invalid_argument("lemniscate takes no parameter");
    return LemniscateRegion{};
  }
  throw std::invalid_argument("unknown predicate: " + name);
}

int default_order() {
  if (const char* env = std::getenv("STRIP_STARLIKE_ORDER")) {
    const int value = std::atoi(env);
    if (value < 2) {
      throw std::invalid_argument(
          "STRIP_STARLIKE_ORDER must be an integer >= 2");
    }
    return value;
  }
  return 64;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void emit(Json j, const std::optional<std::string>& out_path) {
  round_numbers(j);
  const std::string text = j.dump(2) + "\n";
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::invalid_argument("cannot write " + *out_path);
    out << text;
  } else {
    std::cout << text;
  }
}

Json radius_row(const RadiusResult& result) {
  Json row = radius_result_to_json(result);
  double reference = 0.0;
  switch (result.problem.target) {
    case TargetClass::StronglyStarlike: reference = kReferenceSS; break;
    case TargetClass::Parabolic: reference = kReferencePS; break;
    case TargetClass::Lemniscate: reference = kReferenceSL; break;
  }
  row["reference_radius"] = reference;
  row["matches_paper"] =
      std::abs(result.radius - reference) <= kReferenceTolerance;
  return row;
}

int run_table1() {
  const Alpha alpha(kPi / 2.0);
  auto ss = std::async(std::launch::async, [&] {
    return solve(strongly_starlike_problem(alpha, 0.5));
  });
  auto ps = std::async(std::launch::async,
                       [&] { return solve(parabolic_problem(alpha)); });
  auto sl = std::async(std::launch::async,
                       [&] { return solve(lemniscate_problem(alpha)); });
  Json rows = Json::array();
  rows.push_back(radius_row(ss.get()));
  rows.push_back(radius_row(ps.get()));
  rows.push_back(radius_row(sl.get()));
  emit(Json{{"alpha", alpha.radians()}, {"rows", std::move(rows)}},
       std::nullopt);
  return 0;
}

int run_radius(const std::string& alpha_text, const std::string& class_name,
               std::optional<double> gamma) {
  const Alpha alpha(parse_angle(alpha_text));
  RadiusProblem problem = [&] {
    if (class_name == "ss") {
      return strongly_starlike_problem(alpha, gamma.value_or(0.5));
    }
    if (gamma) {
      throw std::invalid_argument("--gamma only applies to --class ss");
    }
    if (class_name == "ps") return parabolic_problem(alpha);
    if (class_name == "sl") return lemniscate_problem(alpha);
    throw std::invalid_argument("--class must be ss, ps or sl");
  }();
  emit(radius_result_to_json(solve(problem)), std::nullopt);
  return 0;
}

int run_coeffs(const std::string& alpha_text, std::optional<int> order_flag,
               const std::optional<std::string>& schwarz_path) {
  const Alpha alpha(parse_angle(alpha_text));
  const int order = order_flag.value_or(default_order());
  NormalizedFunction f = schwarz_path
      ? from_schwarz(alpha, schwarz_from_json(load_json_file(*schwarz_path)),
                     order)
      : extremal(alpha, order);

  Json j = normalized_to_json(f);
  j["alpha"] = alpha.radians();
  Json moduli = Json::array();
  Json within = Json::array();
  for (int n = 0; n <= f.order(); ++n) {
    const double modulus = std::abs(f.coeff(n));
    moduli.push_back(modulus);
    within.push_back(modulus <= 1.0 + 1e-9);
  }
  j["moduli"] = std::move(moduli);
  j["within_unit_bound"] = std::move(within);
  emit(std::move(j), std::nullopt);
  return 0;
}

int run_membership(const std::string& input_path,
                   const std::string& predicate_text, double r, int samples) {
  const NormalizedFunction f =
      normalized_from_json(load_json_file(input_path));
  const RegionPredicate predicate = parse_predicate(predicate_text);
  emit(membership_report_to_json(test_membership(f, predicate, r, samples)),
       std::nullopt);
  return 0;
}

int run_bounds(const std::string& alpha_text, double r) {
  const Alpha alpha(parse_angle(alpha_text));
  const RealBounds bounds = ratio_real_bounds(r, alpha);
  Json j{{"alpha", alpha.radians()},
         {"r", r},
         {"re_lower", bounds.lower},
         {"re_upper", bounds.upper},
         {"im_bound", ratio_imag_bound(r, alpha)},
         {"center_angle", disk_center_angle(r, alpha)},
         {"half_angle", disk_half_angle(r, alpha)},
         {"max_modulus", max_modulus_bound(r, alpha)}};
  if (r > 0.0) {
    const ImageDisk disk = image_disk(r, alpha);
    j["disk"] = Json{{"center", {disk.center.real(), disk.center.imag()}},
                     {"radius", disk.radius}};
  }
  emit(std::move(j), std::nullopt);
  return 0;
}

int run_boundary(const std::string& alpha_text, double r, int samples,
                 const std::optional<std::string>& out_path,
                 const std::string& format) {
  const Alpha alpha(parse_angle(alpha_text));
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("--r must lie in (0, 1)");
  }
  if (samples < 8) throw std::invalid_argument("--samples must be >= 8");

  // The closed curve traced by zf'/f for the extremal member: K + 1 rows,
  // the last repeating the first at theta = 2 pi.
  std::vector<std::array<double, 3>> rows;
  rows.reserve(samples + 1);
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / samples;
    const Complex q = 1.0 + strip_map(alpha, std::polar(r, theta));
    rows.push_back({theta, q.real(), q.imag()});
  }
  rows.push_back({2.0 * kPi, rows.front()[1], rows.front()[2]});

  if (format == "csv") {
    std::ostringstream csv;
    csv << "theta,re_q,im_q\n";
    for (const auto& row : rows) {
      csv << format_significant(row[0]) << ',' << format_significant(row[1])
          << ',' << format_significant(row[2]) << '\n';
    }
    if (out_path) {
      std::ofstream out(*out_path);
      if (!out) throw std::invalid_argument("cannot write " + *out_path);
      out << csv.str();
    } else {
      std::cout << csv.str();
    }
    return 0;
  }
  if (format != "json") {
    throw std::invalid_argument("--format must be csv or json");
  }
  Json row_array = Json::array();
  for (const auto& row : rows) {
    row_array.push_back(Json::array({row[0], row[1], row[2]}));
  }
  emit(Json{{"alpha", alpha.radians()},
            {"r", r},
            {"samples", samples},
            {"rows", std::move(row_array)}},
       out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for starlike functions whose ratio zf'/f "
               "lies in a vertical strip"};
  app.require_subcommand(1);

  auto* table1 = app.add_subcommand(
      "table1", "Inclusion radii at alpha = pi/2 (ss 1/2, ps, sl)");

  std::string alpha_text;
  std::string class_name;
  double gamma = 0.0;
  auto* radius = app.add_subcommand("radius", "Solve one inclusion radius");
  radius->add_option("--alpha", alpha_text, "Angle (radians or e.g. 2pi/3)")
      ->required();
  radius->add_option("--class", class_name, "Target class: ss, ps or sl")
      ->required();
  auto* gamma_opt =
      radius->add_option("--gamma", gamma, "Order for --class ss");

  std::string coeffs_alpha;
  int coeffs_order = 0;
  std::string schwarz_path;
  auto* coeffs = app.add_subcommand(
      "coeffs", "Taylor coefficients of a class member");
  coeffs->add_option("--alpha", coeffs_alpha)->required();
  auto* order_opt = coeffs->add_option("--order", coeffs_order,
                                       "Series order (default 64, or "
                                       "STRIP_STARLIKE_ORDER)");
  auto* schwarz_opt = coeffs->add_option(
      "--schwarz", schwarz_path, "Schwarz polynomial JSON (default: identity)");

  std::string member_input;
  std::string predicate_text;
  double member_r = 0.0;
  int member_samples = 720;
  auto* membership = app.add_subcommand(
      "membership", "Sample a member against a region predicate");
  membership->add_option("--input", member_input, "Member JSON file")
      ->required();
  membership->add_option("--predicate", predicate_text,
                         "strip:A, starlike:B, strongly_starlike:G, "
                         "parabolic or lemniscate")
      ->required();
  membership->add_option("--r", member_r, "Circle radius")->required();
  membership->add_option("--samples", member_samples, "Sample count");

  std::string bounds_alpha;
  double bounds_r = 0.0;
  auto* bounds = app.add_subcommand(
      "bounds", "Sharp ratio bounds on |z| = r for the whole class");
  bounds->add_option("--alpha", bounds_alpha)->required();
  bounds->add_option("--r", bounds_r, "Radius in [0, 1)")->required();

  std::string boundary_alpha;
  double boundary_r = 0.0;
  int boundary_samples = 0;
  std::string boundary_out;
  std::string boundary_format = "json";
  auto* boundary = app.add_subcommand(
      "boundary", "Extremal ratio curve on |z| = r, for plotting");
  boundary->add_option("--alpha", boundary_alpha)->required();
  boundary->add_option("--r", boundary_r)->required();
  boundary->add_option("--samples", boundary_samples)->required();
  auto* out_opt = boundary->add_option("--out", boundary_out, "Output path");
  boundary->add_option("--format", boundary_format, "csv or json");

  try {
    app.parse(argc, argv);

    if (table1->parsed()) return run_table1();
    if (radius->parsed()) {
      return run_radius(alpha_text, class_name,
                        gamma_opt->count() ? std::optional(gamma)
                                           : std::nullopt);
    }
    if (coeffs->parsed()) {
      return run_coeffs(coeffs_alpha,
                        order_opt->count() ? std::optional(coeffs_order)
                                           : std::nullopt,
                        schwarz_opt->count() ? std::optional(schwarz_path)
                                             : std::nullopt);
    }
    if (membership->parsed()) {
      return run_membership(member_input, predicate_text, member_r,
                            member_samples);
    }
    if (bounds->parsed()) return run_bounds(bounds_alpha, bounds_r);
    if (boundary->parsed()) {
      return run_boundary(boundary_alpha, boundary_r, boundary_samples,
                          out_opt->count() ? std::optional(boundary_out)
                                           : std::nullopt,
                          boundary_format);
    }
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
