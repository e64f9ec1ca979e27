#pragma once

#include <complex>

#include "stripstar/powerseries.hpp"

namespace stripstar {

/// Opening angle of the vertical strip, in radians. Valid values lie in
/// [pi/2, pi); construction allows a relative slack of 1e-12 at the left
/// endpoint so that pi/2 itself is always accepted.
class Alpha {
 public:
  explicit Alpha(double radians);

  double radians() const noexcept { return radians_; }
  /// sin(alpha); strictly positive on the whole valid range.
  double sine() const noexcept { return sine_; }

 private:
  double radians_;
  double sine_;
};

/// Real-part bounds of the strip that the ratio zf'(z)/f(z) must stay in.
struct StripBounds {
  double lower;  // 1 + (alpha - pi) / (2 sin alpha)
  double upper;  // 1 + alpha / (2 sin alpha)

  double width() const noexcept { return upper - lower; }
};

/// Image of the closed disk |z| <= r under (1 + e^{ia}z)/(1 + e^{-ia}z).
/// Satisfies |center|^2 - radius^2 = 1, so the origin stays outside.
struct ImageDisk {
  Complex center;
  double radius;
};

StripBounds strip_bounds(Alpha alpha);

/// n-th Taylor coefficient of the strip mapping: (-1)^(n-1) sin(n a)/(n sin a).
/// Real for every n >= 1, with modulus at most 1.
double strip_map_coefficient(Alpha alpha, int n);

/// Taylor polynomial of the strip mapping; constant term zero, order >= 1.
TruncatedSeries strip_map_series(Alpha alpha, int order);

/// The conformal map of the unit disk associated with the strip:
///   (1 / (2 i sin a)) log((1 + e^{ia}z) / (1 + e^{-ia}z)),
/// principal branch. The log argument never meets the negative real axis for
/// |z| <= 1, so no branch tracking is needed; a BranchHazard is raised when
/// either factor is within 1e-12 of vanishing (possible only as |z| -> 1).
Complex strip_map(Alpha alpha, Complex z);

/// Argument of the image-disk center, in (-pi/2, pi/2). Zero at alpha = pi/2.
double disk_center_angle(double r, Alpha alpha);

/// Half of the angle the image disk subtends at the origin.
double disk_half_angle(double r, Alpha alpha);

/// Largest modulus attained on the image disk; its reciprocal is the
/// smallest. Equals 1 at r = 0, strictly greater than 1 for 0 < r < 1, and
/// is undefined at r = 1 (callers clamp scans to r <= 1 - 1e-9).
double max_modulus_bound(double r, Alpha alpha);

ImageDisk image_disk(double r, Alpha alpha);

/// Sharp bracket for Re(zf'/f) on |z| = r over the whole class.
struct RealBounds {
  double lower;
  double upper;
};

RealBounds ratio_real_bounds(double r, Alpha alpha);

/// Sharp bound for |Im(zf'/f)| on |z| = r over the whole class.
double ratio_imag_bound(double r, Alpha alpha);

/// A numeric probe next to one of the r -> 0+ / r -> 1- endpoints, paired
/// with the limit it is conventionally compared against.
struct LimitPair {
  double value;
  double stated_limit;
};

/// Values of the three kernel functions at r = 1e-8 and r = 1 - 1e-8.
/// The stated limits are (0, 0, 1) at the origin and
/// (3 pi/2 - alpha, pi/2, +infinity) at the boundary; the boundary
/// center-angle pairing is recorded as stated even though the formula's
/// actual limit is alpha - pi/2 (see the tests).
struct LimitProbeReport {
  LimitPair center_angle_origin;
  LimitPair half_angle_origin;
  LimitPair max_modulus_origin;
  LimitPair center_angle_boundary;
  LimitPair half_angle_boundary;
  LimitPair max_modulus_boundary;
};

LimitProbeReport limit_probe(Alpha alpha);

}  // namespace stripstar
