#include "stripstar/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "stripstar/errors.hpp"

namespace stripstar {

namespace {

bool finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// Highest index with a bitwise-nonzero coefficient; -1 for the zero series.
int effective_degree(const TruncatedSeries& a) {
  for (int k = a.order(); k >= 0; --k) {
    if (a.coeff(k) != Complex{}) return k;
  }
  return -1;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least the constant term");
  }
  for (const Complex& c : coeffs_) {
    if (!finite(c)) {
      throw std::invalid_argument("series coefficients must be finite");
    }
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw std::invalid_argument("identity needs order >= 1");
  std::vector<Complex> c(order + 1);
  c[1] = 1.0;
  return TruncatedSeries(std::move(c));
}

Complex TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(k) +
                            " outside order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
  std::vector<Complex> c(a.coeffs());
  for (Complex& x : c) x *= factor;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += a.coeff(j) * b.coeff(k - j);
    c[k] = sum;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b,
                    double unit_floor) {
  const Complex b0 = b.coeff(0);
  if (!(std::abs(b0) > unit_floor)) {
    throw DivisionByNonUnit("divisor constant term has modulus " +
                            std::to_string(std::abs(b0)));
  }
  const int n = min_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Complex sum = a.coeff(k);
    for (int j = 1; j <= k; ++j) sum -= b.coeff(j) * c[k - j];
    c[k] = sum / b0;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  const int n = a.order();
  std::vector<Complex> e(n + 1);
  e[0] = std::exp(a.coeff(0));
  for (int k = 1; k <= n; ++k) {
    Complex sum = 0.0;
    for (int j = 1; j <= k; ++j) {
      sum += static_cast<double>(j) * a.coeff(j) * e[k - j];
    }
    e[k] = sum / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries log_series(const TruncatedSeries& a, double unit_floor) {
  const Complex a0 = a.coeff(0);
  if (!(std::abs(a0) > unit_floor)) {
    throw DivisionByNonUnit("log of a series with constant term modulus " +
                            std::to_string(std::abs(a0)));
  }
  const int n = a.order();
  std::vector<Complex> l(n + 1);
  l[0] = std::log(a0);
  for (int k = 1; k <= n; ++k) {
    Complex sum = static_cast<double>(k) * a.coeff(k);
    for (int j = 1; j < k; ++j) {
      sum -= a.coeff(j) * static_cast<double>(k - j) * l[k - j];
    }
    l[k] = sum / (static_cast<double>(k) * a0);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  const int n = a.order();
  if (n == 0) return TruncatedSeries::zero(0);
  std::vector<Complex> c(n);
  for (int k = 0; k < n; ++k) c[k] = static_cast<double>(k + 1) * a.coeff(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
  if (a.coeff(0) != Complex{}) {
    throw NonzeroConstantTerm("integrate requires a zero constant term");
  }
  const int n = a.order();
  std::vector<Complex> c(n + 2);
  for (int k = 1; k <= n + 1; ++k) c[k] = a.coeff(k - 1) / static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

Complex evaluate(const TruncatedSeries& a, Complex z) {
  Complex acc = 0.0;
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a.coeff(k);
  return acc;
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  if (inner.coeff(0) != Complex{}) {
    throw NonzeroInnerConstant("compose requires inner(0) == 0");
  }
  const int n = min_order(outer, inner);
  // Exact zero tail coefficients of the inner series contribute nothing;
  // skipping them makes composition with a padded polynomial O(N^2 deg).
  const int deg = std::min(effective_degree(inner), n);

  std::vector<Complex> acc(n + 1);
  acc[0] = outer.coeff(n);
  std::vector<Complex> next(n + 1);
  for (int k = n - 1; k >= 0; --k) {
    std::fill(next.begin(), next.end(), Complex{});
    for (int m = 0; m <= n; ++m) {
      const int jmax = std::min(m, deg);
      Complex sum = 0.0;
      for (int j = 1; j <= jmax; ++j) sum += inner.coeff(j) * acc[m - j];
      next[m] = sum;
    }
    next[0] += outer.coeff(k);
    acc.swap(next);
  }
  return TruncatedSeries(std::move(acc));
}

TruncatedSeries shift_up(const TruncatedSeries& a) {
  std::vector<Complex> c(a.order() + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_down(const TruncatedSeries& a) {
  if (a.order() < 1) {
    throw std::invalid_argument("shift_down needs order >= 1");
  }
  if (a.coeff(0) != Complex{}) {
    throw NonzeroConstantTerm("shift_down requires a zero constant term");
  }
  std::vector<Complex> c(a.order());
  for (int k = 1; k <= a.order(); ++k) c[k - 1] = a.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries truncated(const TruncatedSeries& a, int order) {
  if (order < 0 || order > a.order()) {
    throw std::invalid_argument("truncated needs 0 <= order <= current order");
  }
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries padded(const TruncatedSeries& a, int order) {
  if (order < a.order()) {
    throw std::invalid_argument("padded needs order >= current order");
  }
  std::vector<Complex> c(a.coeffs());
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) * b.coeff(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace stripstar
