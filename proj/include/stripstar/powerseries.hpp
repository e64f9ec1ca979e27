#pragma once

#include <complex>
#include <vector>

namespace stripstar {

using Complex = std::complex<double>;

/// Divisor constant terms at or below this modulus are treated as zero.
inline constexpr double kDivisionFloor = 1e-300;

/// Degree-N complex Taylor polynomial c_0 + c_1 z + ... + c_N z^N.
///
/// The order N is part of the value: binary operations truncate to the
/// smaller operand order instead of zero-padding, so a result never carries
/// coefficients that were not determined by both inputs. Use padded() when a
/// series is known to be an exact polynomial and higher orders are wanted.
///
/// Values are immutable after construction; all operations are pure
/// functions, so series can be shared freely between threads.
class TruncatedSeries {
 public:
  /// Takes ownership of the coefficient list c_0..c_N. Rejects empty lists
  /// and non-finite coefficients.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(Complex value, int order = 0);
  /// The monomial z, at the given order (>= 1).
  static TruncatedSeries identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex coeff(int k) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

/// Cauchy product truncated to the smaller operand order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series quotient a/b by forward substitution. Requires |b(0)| > unit_floor.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b,
                    double unit_floor = kDivisionFloor);

/// exp(a) via the recursion E' = a'E, with E(0) = exp(a(0)).
TruncatedSeries exp_series(const TruncatedSeries& a);

/// Principal-branch log(a) via L' = a'/a. Requires |a(0)| > unit_floor.
TruncatedSeries log_series(const TruncatedSeries& a,
                           double unit_floor = kDivisionFloor);

TruncatedSeries derivative(const TruncatedSeries& a);

/// Antiderivative with zero constant of integration. Only defined when
/// a(0) == 0; a nonzero constant term means the caller has not decided how
/// the c_0 contribution should be handled and is rejected.
TruncatedSeries integrate(const TruncatedSeries& a);

/// Horner evaluation of the polynomial. Meaningful for |z| <= 1; the tail of
/// the underlying function is not accounted for.
Complex evaluate(const TruncatedSeries& a, Complex z);

/// outer(inner(z)) truncated to min(outer.order, inner.order).
/// Requires inner(0) == 0 exactly.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

/// Multiplication by z (exact; order grows by one).
TruncatedSeries shift_up(const TruncatedSeries& a);

/// Division by z. Requires a(0) == 0 exactly; order shrinks by one.
TruncatedSeries shift_down(const TruncatedSeries& a);

/// Copy truncated to a lower (or equal) order.
TruncatedSeries truncated(const TruncatedSeries& a, int order);

/// Copy zero-extended to a higher (or equal) order. This is the caller's
/// declaration that the series is an exact polynomial.
TruncatedSeries padded(const TruncatedSeries& a, int order);

/// Coefficient-wise (Hadamard) product, truncated to the smaller order.
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace stripstar
