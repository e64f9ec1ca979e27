#include "stripstar/function_factory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "stripstar/errors.hpp"

namespace stripstar {

namespace {

// Antiderivative of g(t)/t for a series with g(0) == 0: index m maps to
// g_m / m. Equivalent to shift_down followed by the plain antiderivative,
// fused so the intermediate nonzero constant term never appears.
TruncatedSeries integrate_over_t(const TruncatedSeries& g) {
  std::vector<Complex> c(g.order() + 1);
  for (int m = 1; m <= g.order(); ++m) {
    c[m] = g.coeff(m) / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(c));
}

// z * exp(growth) with the normalization c_0 = 0, c_1 = 1 enforced
// bit-exactly afterwards. growth(0) must be 0, which already makes c_1 = 1
// up to the rounding of exp(0).
NormalizedFunction normalized_exponential(const TruncatedSeries& growth) {
  TruncatedSeries f = shift_up(exp_series(growth));
  std::vector<Complex> c(f.coeffs());
  c[0] = 0.0;
  if (c[1] != Complex(1.0)) {
    const Complex unit = c[1];
    for (Complex& x : c) x /= unit;
  }
  c[1] = 1.0;
  return NormalizedFunction(TruncatedSeries(std::move(c)));
}

}  // namespace

NormalizedFunction::NormalizedFunction(TruncatedSeries series)
    : series_(std::move(series)) {
  if (series_.order() < 1) {
    throw std::invalid_argument("normalized function needs order >= 1");
  }
  if (series_.coeff(0) != Complex{}) {
    throw std::invalid_argument("normalized function requires c_0 == 0");
  }
  if (series_.coeff(1) != Complex(1.0)) {
    throw std::invalid_argument("normalized function requires c_1 == 1");
  }
}

SchwarzFunction::SchwarzFunction(TruncatedSeries series)
    : series_(std::move(series)), certified_bound_(0.0) {
  if (series_.coeff(0) != Complex{}) {
    throw std::invalid_argument("Schwarz function requires w(0) == 0");
  }
  for (int k = 0; k < kBoundarySamples; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / kBoundarySamples;
    const Complex z = std::polar(kSampleRadius, theta);
    certified_bound_ = std::max(certified_bound_, std::abs(evaluate(series_, z)));
  }
  if (!(certified_bound_ < 1.0)) {
    throw std::invalid_argument(
        "Schwarz surrogate rejected: sampled boundary bound " +
        std::to_string(certified_bound_) + " is not below 1");
  }
}

NormalizedFunction extremal(Alpha alpha, int order) {
  if (order < 2) throw std::invalid_argument("extremal needs order >= 2");
  std::vector<Complex> growth(order);
  for (int n = 1; n <= order - 1; ++n) {
    growth[n] = strip_map_coefficient(alpha, n) / static_cast<double>(n);
  }
  return normalized_exponential(TruncatedSeries(std::move(growth)));
}

NormalizedFunction from_schwarz(Alpha alpha, const SchwarzFunction& w,
                                int order) {
  if (order < 2) throw std::invalid_argument("from_schwarz needs order >= 2");
  if (w.series().order() > order - 1) {
    throw std::invalid_argument(
        "Schwarz polynomial degree exceeds the requested order");
  }
  const TruncatedSeries mapped =
      compose(strip_map_series(alpha, order - 1),
              padded(w.series(), order - 1));
  return normalized_exponential(integrate_over_t(mapped));
}

TruncatedSeries starlike_ratio(const NormalizedFunction& f) {
  // zf'/f with the z factor cancelled from both sides: zf'/z = f' and f/z,
  // whose constant term is a_1 = 1, so the division is always admissible.
  return div(derivative(f.series()), shift_down(f.series()));
}

std::vector<Complex> coefficients_from_ratio(
    const std::vector<Complex>& ratio_tail) {
  const std::size_t m = ratio_tail.size();
  std::vector<Complex> a(m);  // a[i] holds a_{i+2}
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t n = i + 2;
    Complex sum = ratio_tail[n - 2];  // A_{n-1}
    for (std::size_t k = 2; k <= n - 1; ++k) {
      sum += a[k - 2] * ratio_tail[n - k - 1];
    }
    a[i] = sum / static_cast<double>(n - 1);
  }
  return a;
}

}  // namespace stripstar
