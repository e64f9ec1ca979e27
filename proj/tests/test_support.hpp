#pragma once

// Shared helpers for the test suites: seeded generators for random series
// and Schwarz polynomials, and coefficient-distance utilities.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "stripstar/function_factory.hpp"
#include "stripstar/powerseries.hpp"

namespace testutil {

using stripstar::Complex;
using stripstar::TruncatedSeries;

inline Complex random_in_disk(std::mt19937& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Complex c(u(rng), u(rng));
    if (std::norm(c) <= 1.0) return radius * c;
  }
}

// Random series with geometrically decaying coefficients. The decay keeps
// quotients and exponentials well conditioned, so round-trip properties test
// algebra rather than triangular error growth.
inline TruncatedSeries random_series(std::mt19937& rng, int order,
                                     double decay = 0.3) {
  std::vector<Complex> c(order + 1);
  double scale = 1.0;
  for (int k = 0; k <= order; ++k) {
    c[k] = random_in_disk(rng, scale);
    scale *= decay;
  }
  return TruncatedSeries(std::move(c));
}

// As above but with the constant term forced to lie in an annulus around 1,
// for divisors and log arguments.
inline TruncatedSeries random_unit_like_series(std::mt19937& rng, int order,
                                               double decay = 0.3) {
  TruncatedSeries s = random_series(rng, order, decay);
  std::vector<Complex> c(s.coeffs());
  c[0] = 1.0 + random_in_disk(rng, 0.4);
  return TruncatedSeries(std::move(c));
}

inline double max_coeff_distance(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) {
    worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  }
  return worst;
}

inline double max_coeff_magnitude(const TruncatedSeries& a) {
  double worst = 0.0;
  for (const Complex& c : a.coeffs()) worst = std::max(worst, std::abs(c));
  return worst;
}

// Random polynomial with w(0) = 0, scaled so the sampled boundary bound lands
// on `target_bound` (strictly below 1).
inline stripstar::SchwarzFunction random_schwarz(std::mt19937& rng, int degree,
                                                 double target_bound) {
  std::vector<Complex> c(degree + 1);
  double scale = 1.0;
  for (int k = 1; k <= degree; ++k) {
    c[k] = random_in_disk(rng, scale);
    scale *= 0.6;
  }
  TruncatedSeries raw{std::vector<Complex>(c)};
  double sampled = 0.0;
  for (int k = 0; k < stripstar::SchwarzFunction::kBoundarySamples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k /
                         stripstar::SchwarzFunction::kBoundarySamples;
    const Complex z =
        std::polar(stripstar::SchwarzFunction::kSampleRadius, theta);
    sampled = std::max(sampled, std::abs(stripstar::evaluate(raw, z)));
  }
  const double factor = sampled > 0.0 ? target_bound / sampled : 0.0;
  for (Complex& x : c) x *= factor;
  return stripstar::SchwarzFunction(TruncatedSeries(std::move(c)));
}

}  // namespace testutil
