#include "stripstar/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "stripstar/errors.hpp"

namespace stripstar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaExclusionTol = 1e-9;
constexpr double kDerivativeFloor = 1e-9;

void require_probe_radius(double r) {
  if (!(r > 0.0 && r <= 1.0 - 1e-9)) {
    throw std::invalid_argument("probe radius must lie in (0, 1 - 1e-9]");
  }
}

Complex circle_point(double r, int k, int samples) {
  const double theta = 2.0 * kPi * static_cast<double>(k) / samples;
  return std::polar(r, theta);
}

}  // namespace

StarlikeRegion::StarlikeRegion(double beta_) : beta(beta_) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("starlike order must lie in [0, 1)");
  }
}

StronglyStarlikeRegion::StronglyStarlikeRegion(double gamma_) : gamma(gamma_) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("strongly starlike order must lie in (0, 1]");
  }
}

double margin(const RegionPredicate& predicate, Complex w) {
  const double u = w.real();
  const double v = w.imag();
  return std::visit(
      [&](const auto& region) -> double {
        using T = std::decay_t<decltype(region)>;
        if constexpr (std::is_same_v<T, StripRegion>) {
          const StripBounds b = strip_bounds(region.alpha);
          return std::min(u - b.lower, b.upper - u);
        } else if constexpr (std::is_same_v<T, StarlikeRegion>) {
          return u - region.beta;
        } else if constexpr (std::is_same_v<T, StronglyStarlikeRegion>) {
          return kPi * region.gamma / 2.0 - std::abs(std::arg(w));
        } else if constexpr (std::is_same_v<T, ParabolicRegion>) {
          return (2.0 * u - 1.0) - v * v;
        } else {
          const double m2 = u * u + v * v;
          return 2.0 * (u * u - v * v) - m2 * m2;
        }
      },
      predicate);
}

MembershipReport test_membership(const NormalizedFunction& f,
                                 const RegionPredicate& predicate, double r,
                                 int samples) {
  require_probe_radius(r);
  if (samples < 8) throw std::invalid_argument("need at least 8 samples");

  const TruncatedSeries q = starlike_ratio(f);
  double worst = std::numeric_limits<double>::infinity();
  Complex witness = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Complex z = circle_point(r, k, samples);
    const double m = margin(predicate, evaluate(q, z));
    if (m < worst) {
      worst = m;
      witness = z;
    }
  }
  return MembershipReport{predicate, r, samples, worst, witness};
}

EnvelopeReport envelope_check(const NormalizedFunction& f, Alpha alpha,
                              double r, int samples, double slack) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("envelope radius must lie in (0, 1)");
  }
  if (samples < 8) throw std::invalid_argument("need at least 8 samples");

  const RealBounds bounds = ratio_real_bounds(r, alpha);
  const double im_bound = ratio_imag_bound(r, alpha);
  const TruncatedSeries q = starlike_ratio(f);

  EnvelopeReport report{bounds.lower, bounds.upper, im_bound,
                        std::numeric_limits<double>::infinity(),
                        -std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < samples; ++k) {
    const Complex z = circle_point(r, k, samples);
    const Complex w = evaluate(q, z);
    report.attained_re_min = std::min(report.attained_re_min, w.real());
    report.attained_re_max = std::max(report.attained_re_max, w.real());
    report.attained_im_max = std::max(report.attained_im_max,
                                      std::abs(w.imag()));
    const bool ok = w.real() >= bounds.lower - slack &&
                    w.real() <= bounds.upper + slack &&
                    std::abs(w.imag()) <= im_bound + slack;
    if (!ok) {
      std::ostringstream msg;
      msg << "ratio value (" << w.real() << ", " << w.imag()
          << ") escapes the class envelope at z = (" << z.real() << ", "
          << z.imag() << "), r = " << r;
      throw BoundViolation(msg.str());
    }
  }
  return report;
}

ConvolutionScan convolution_min_modulus(const NormalizedFunction& f,
                                        Alpha alpha,
                                        const std::vector<double>& thetas,
                                        double r, int radial_steps,
                                        int angular_steps) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("scan radius must lie in (0, 1)");
  }
  if (radial_steps < 2 || angular_steps < 4) {
    throw std::invalid_argument("scan grid too small");
  }
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < 2.0 * kPi)) {
      throw ExcludedTheta("theta must lie in (0, 2 pi)");
    }
    if (std::abs(std::remainder(theta - alpha.radians() - kPi, 2.0 * kPi)) <=
        kThetaExclusionTol) {
      throw ExcludedTheta("theta - alpha = pi is excluded, got theta = " +
                          std::to_string(theta));
    }
  }

  const TruncatedSeries& fs = f.series();
  const int n = fs.order();
  const TruncatedSeries z_fprime = shift_up(derivative(fs));

  constexpr double kInnerRadius = 0.05;

  ConvolutionScan scan{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
  std::vector<Complex> kernel(n + 1);
  for (double theta : thetas) {
    const Complex c = strip_map(alpha, std::polar(1.0, theta));
    // Direct form zf' - (1 + c) f and the Hadamard form against the kernel
    // whose n-th coefficient is (n - 1) - c.
    const TruncatedSeries direct =
        sub(truncated(z_fprime, n), scale(fs, 1.0 + c));
    for (int k = 0; k <= n; ++k) {
      kernel[k] = (k == 0) ? Complex{} : Complex(k - 1.0) - c;
    }
    const TruncatedSeries folded = hadamard(fs, TruncatedSeries(kernel));

    for (int i = 0; i < radial_steps; ++i) {
      const double rho =
          kInnerRadius + (r - kInnerRadius) * i / (radial_steps - 1.0);
      for (int j = 0; j < angular_steps; ++j) {
        const Complex z = circle_point(rho, j, angular_steps);
        const Complex direct_value = evaluate(direct, z);
        const Complex folded_value = evaluate(folded, z);
        scan.max_route_disagreement =
            std::max(scan.max_route_disagreement,
                     std::abs(direct_value - folded_value));
        const double modulus = std::abs(direct_value);
        if (modulus < scan.min_modulus) {
          scan.min_modulus = modulus;
          scan.theta_at_min = theta;
          scan.z_at_min = z;
        }
      }
    }
  }
  return scan;
}

std::vector<double> default_theta_grid(int n) {
  if (n < 1) throw std::invalid_argument("theta grid needs n >= 1");
  std::vector<double> thetas(n);
  for (int j = 0; j < n; ++j) {
    thetas[j] = 2.0 * kPi * (j + 0.5) / n;
  }
  return thetas;
}

SufficiencyReport sufficiency_check(const NormalizedFunction& f, Alpha alpha,
                                    double r, int samples) {
  require_probe_radius(r);
  if (samples < 8) throw std::invalid_argument("need at least 8 samples");

  const TruncatedSeries fprime = derivative(f.series());
  const TruncatedSeries curvature =
      div(add(fprime, shift_up(derivative(fprime))), fprime);
  const TruncatedSeries q = starlike_ratio(f);
  const RegionPredicate strip = StripRegion{alpha};

  SufficiencyReport report{true, std::numeric_limits<double>::infinity(), 0.0,
                           true, std::numeric_limits<double>::infinity(), 0.0,
                           true};
  for (int k = 0; k < samples; ++k) {
    const Complex z = circle_point(r, k, samples);
    if (std::abs(evaluate(fprime, z)) < kDerivativeFloor) {
      throw DerivativeVanishes("f' vanishes on the sample grid near z = (" +
                               std::to_string(z.real()) + ", " +
                               std::to_string(z.imag()) + ")");
    }
    const double hyp = margin(strip, evaluate(curvature, z));
    if (hyp < report.hypothesis_worst_margin) {
      report.hypothesis_worst_margin = hyp;
      report.hypothesis_witness = z;
    }
    const double con = margin(strip, evaluate(q, z));
    if (con < report.conclusion_worst_margin) {
      report.conclusion_worst_margin = con;
      report.conclusion_witness = z;
    }
  }
  report.hypothesis_holds = report.hypothesis_worst_margin > 0.0;
  report.conclusion_holds = report.conclusion_worst_margin > 0.0;
  return report;
}

}  // namespace stripstar
