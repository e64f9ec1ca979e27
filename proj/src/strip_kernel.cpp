#include "stripstar/strip_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stripstar/errors.hpp"

namespace stripstar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlphaLeftSlack = 1e-12;
constexpr double kBranchFloor = 1e-12;
constexpr double kAsinClampTol = 1e-12;

// arcsin with a rounding guard: arguments are clamped into [-1, 1] when they
// overshoot by less than kAsinClampTol; anything larger indicates a broken
// identity upstream.
double checked_asin(double x) {
  if (x > 1.0) {
    if (x - 1.0 >= kAsinClampTol) {
      throw InternalConsistencyError("arcsin argument " + std::to_string(x));
    }
    x = 1.0;
  } else if (x < -1.0) {
    if (-1.0 - x >= kAsinClampTol) {
      throw InternalConsistencyError("arcsin argument " + std::to_string(x));
    }
    x = -1.0;
  }
  return std::asin(x);
}

void require_radius_in_unit(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("radius must lie in [0, 1), got " +
                                std::to_string(r));
  }
}

// sqrt(1 - 2 r^2 cos 2a + r^4): distance from the origin to the image-disk
// center, scaled by (1 - r^2).
double center_distance_scaled(double r, Alpha alpha) {
  const double a = alpha.radians();
  return std::sqrt(1.0 - 2.0 * r * r * std::cos(2.0 * a) + r * r * r * r);
}

}  // namespace

Alpha::Alpha(double radians) : radians_(radians) {
  const double left = (kPi / 2.0) * (1.0 - kAlphaLeftSlack);
  if (!(radians >= left && radians < kPi)) {
    throw std::invalid_argument("alpha must lie in [pi/2, pi), got " +
                                std::to_string(radians));
  }
  sine_ = std::sin(radians);
  if (!(sine_ > 0.0)) {
    throw std::invalid_argument("sin(alpha) must be positive");
  }
}

StripBounds strip_bounds(Alpha alpha) {
  const double a = alpha.radians();
  const double s = alpha.sine();
  return StripBounds{1.0 + (a - kPi) / (2.0 * s), 1.0 + a / (2.0 * s)};
}

double strip_map_coefficient(Alpha alpha, int n) {
  if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * std::sin(n * alpha.radians()) /
         (static_cast<double>(n) * alpha.sine());
}

TruncatedSeries strip_map_series(Alpha alpha, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<Complex> c(order + 1);
  for (int n = 1; n <= order; ++n) c[n] = strip_map_coefficient(alpha, n);
  return TruncatedSeries(std::move(c));
}

Complex strip_map(Alpha alpha, Complex z) {
  const double a = alpha.radians();
  const Complex numerator = 1.0 + std::polar(1.0, a) * z;
  const Complex denominator = 1.0 + std::polar(1.0, -a) * z;
  if (std::abs(numerator) < kBranchFloor ||
      std::abs(denominator) < kBranchFloor) {
    throw BranchHazard("strip map evaluated at a boundary singularity");
  }
  const Complex quotient = numerator / denominator;
  return std::log(quotient) / (Complex(0.0, 2.0) * alpha.sine());
}

double disk_center_angle(double r, Alpha alpha) {
  require_radius_in_unit(r);
  const double q = center_distance_scaled(r, alpha);
  return checked_asin(-r * r * std::sin(2.0 * alpha.radians()) / q);
}

double disk_half_angle(double r, Alpha alpha) {
  require_radius_in_unit(r);
  const double q = center_distance_scaled(r, alpha);
  return checked_asin(2.0 * r * alpha.sine() / q);
}

double max_modulus_bound(double r, Alpha alpha) {
  require_radius_in_unit(r);
  const double q = center_distance_scaled(r, alpha);
  return (q + 2.0 * r * alpha.sine()) / (1.0 - r * r);
}

ImageDisk image_disk(double r, Alpha alpha) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("image disk needs 0 < r < 1");
  }
  const double a = alpha.radians();
  const double one_minus_r2 = 1.0 - r * r;
  const Complex center((1.0 - r * r * std::cos(2.0 * a)) / one_minus_r2,
                       -r * r * std::sin(2.0 * a) / one_minus_r2);
  const double radius = 2.0 * r * alpha.sine() / one_minus_r2;
  return ImageDisk{center, radius};
}

RealBounds ratio_real_bounds(double r, Alpha alpha) {
  const double m1 = disk_center_angle(r, alpha);
  const double m2 = disk_half_angle(r, alpha);
  const double s2 = 2.0 * alpha.sine();
  return RealBounds{1.0 + (m1 - m2) / s2, 1.0 + (m1 + m2) / s2};
}

double ratio_imag_bound(double r, Alpha alpha) {
  return std::log(max_modulus_bound(r, alpha)) / (2.0 * alpha.sine());
}

LimitProbeReport limit_probe(Alpha alpha) {
  constexpr double r0 = 1e-8;
  constexpr double r1 = 1.0 - 1e-8;
  const double inf = std::numeric_limits<double>::infinity();
  return LimitProbeReport{
      {disk_center_angle(r0, alpha), 0.0},
      {disk_half_angle(r0, alpha), 0.0},
      {max_modulus_bound(r0, alpha), 1.0},
      {disk_center_angle(r1, alpha), 1.5 * kPi - alpha.radians()},
      {disk_half_angle(r1, alpha), kPi / 2.0},
      {max_modulus_bound(r1, alpha), inf},
  };
}

}  // namespace stripstar
