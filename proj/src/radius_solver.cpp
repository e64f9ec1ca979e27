#include "stripstar/radius_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stripstar/errors.hpp"

namespace stripstar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanCeiling = 1.0 - 1e-9;

double log_max_modulus(double r, Alpha alpha) {
  return std::log(max_modulus_bound(r, alpha));
}

// Squared-coordinates form of the lemniscate defect at the envelope corner
// (u, v): (u^2 + v^2)^2 - 2 u^2 + 2 v^2, negative strictly inside.
double lemniscate_corner_defect(double u, double v) {
  const double m2 = u * u + v * v;
  return m2 * m2 - 2.0 * u * u + 2.0 * v * v;
}

}  // namespace

RadiusProblem strongly_starlike_problem(Alpha alpha, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument(
        "strongly starlike order must lie in (0, 1), got " +
        std::to_string(gamma));
  }
  return RadiusProblem{TargetClass::StronglyStarlike, alpha, gamma};
}

RadiusProblem parabolic_problem(Alpha alpha) {
  return RadiusProblem{TargetClass::Parabolic, alpha, std::nullopt};
}

RadiusProblem lemniscate_problem(Alpha alpha) {
  return RadiusProblem{TargetClass::Lemniscate, alpha, std::nullopt};
}

double ss_defect(double r, Alpha alpha, double gamma) {
  const double m1 = disk_center_angle(r, alpha);
  const double m2 = disk_half_angle(r, alpha);
  const double denominator = 2.0 * alpha.sine() + m1 - m2;
  return std::atan(log_max_modulus(r, alpha) / denominator) -
         kPi * gamma / 2.0;
}

double ps_defect(double r, Alpha alpha) {
  const double s = alpha.sine();
  const double lg = log_max_modulus(r, alpha);
  const double m1 = disk_center_angle(r, alpha);
  const double m2 = disk_half_angle(r, alpha);
  return lg * lg / (4.0 * s * s) - (m1 - m2) / s - 1.0;
}

double sl_defect_upper(double r, Alpha alpha) {
  const double s2 = 2.0 * alpha.sine();
  const double u = 1.0 + (disk_center_angle(r, alpha) +
                          disk_half_angle(r, alpha)) / s2;
  return lemniscate_corner_defect(u, log_max_modulus(r, alpha) / s2);
}

double sl_defect_lower(double r, Alpha alpha) {
  const double s2 = 2.0 * alpha.sine();
  const double u = 1.0 + (disk_center_angle(r, alpha) -
                          disk_half_angle(r, alpha)) / s2;
  return lemniscate_corner_defect(u, log_max_modulus(r, alpha) / s2);
}

RootResult least_positive_root(const std::function<double(double)>& fn,
                               RootSearchOptions options) {
  if (!(options.scan_step > 0.0 && options.scan_step < 1.0)) {
    throw std::invalid_argument("scan step must lie in (0, 1)");
  }
  if (!(options.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  int evaluations = 1;
  double lo = 0.0;
  double f_lo = fn(0.0);
  if (!(f_lo < 0.0)) {
    throw std::invalid_argument("function must be negative at r = 0");
  }

  double hi = 0.0;
  bool bracketed = false;
  for (int k = 1; !bracketed; ++k) {
    double r = k * options.scan_step;
    if (r >= kScanCeiling) r = kScanCeiling;
    const double f = fn(r);
    ++evaluations;
    if (f == 0.0) return RootResult{r, evaluations};
    if (f > 0.0) {
      hi = r;
      bracketed = true;
    } else {
      lo = r;
      f_lo = f;
      if (r == kScanCeiling) {
        throw NoSignChange("no sign change on (0, 1 - 1e-9]");
      }
    }
  }

  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point limit
    const double f = fn(mid);
    ++evaluations;
    if (f == 0.0) return RootResult{mid, evaluations};
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  return RootResult{0.5 * (lo + hi), evaluations};
}

RadiusResult solve(const RadiusProblem& problem, RootSearchOptions options) {
  const Alpha alpha = problem.alpha;
  switch (problem.target) {
    case TargetClass::StronglyStarlike: {
      if (!problem.gamma) {
        throw std::invalid_argument("strongly starlike problem needs gamma");
      }
      const double gamma = *problem.gamma;
      const RootResult root = least_positive_root(
          [&](double r) { return ss_defect(r, alpha, gamma); }, options);
      return RadiusResult{problem, root.root, std::nullopt, std::nullopt,
                          root.evaluations};
    }
    case TargetClass::Parabolic: {
      const RootResult root = least_positive_root(
          [&](double r) { return ps_defect(r, alpha); }, options);
      return RadiusResult{problem, root.root, std::nullopt, std::nullopt,
                          root.evaluations};
    }
    case TargetClass::Lemniscate: {
      const RootResult upper = least_positive_root(
          [&](double r) { return sl_defect_upper(r, alpha); }, options);
      const RootResult lower = least_positive_root(
          [&](double r) { return sl_defect_lower(r, alpha); }, options);
      return RadiusResult{problem, std::min(upper.root, lower.root),
                          upper.root, lower.root,
                          upper.evaluations + lower.evaluations};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace stripstar
