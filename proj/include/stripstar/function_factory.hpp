#pragma once

#include <vector>

#include "stripstar/powerseries.hpp"
#include "stripstar/strip_kernel.hpp"

namespace stripstar {

/// A normalized analytic function f(z) = z + a_2 z^2 + ..., represented by
/// its Taylor polynomial. Construction demands c_0 == 0 and c_1 == 1
/// bit-exactly.
class NormalizedFunction {
 public:
  explicit NormalizedFunction(TruncatedSeries series);

  const TruncatedSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }
  /// The Taylor coefficient a_n (a_0 = 0, a_1 = 1).
  Complex coeff(int n) const { return series_.coeff(n); }

 private:
  TruncatedSeries series_;
};

/// Polynomial surrogate for a Schwarz function: w(0) = 0 and the sampled
/// sup-norm on a circle just inside the boundary is certified below 1.
/// The certificate is a finite-sample statement about the polynomial, not a
/// proof about an underlying infinite series.
class SchwarzFunction {
 public:
  static constexpr int kBoundarySamples = 2048;
  static constexpr double kSampleRadius = 1.0 - 1e-6;

  explicit SchwarzFunction(TruncatedSeries series);

  const TruncatedSeries& series() const noexcept { return series_; }
  double certified_bound() const noexcept { return certified_bound_; }

 private:
  TruncatedSeries series_;
  double certified_bound_;
};

/// The member generated by w(z) = z: f(z) = z exp(sum_n c_n z^n / n) where
/// c_n are the strip-map coefficients. Its ratio zf'/f attains the sharp
/// class bounds. Requires order >= 2.
NormalizedFunction extremal(Alpha alpha, int order);

/// The member generated by an arbitrary Schwarz polynomial through the
/// integral representation f(z) = z exp(int_0^z strip_map(w(t))/t dt).
/// The Schwarz polynomial must have degree < order; it is zero-padded
/// internally. The result is renormalized so c_0 = 0 and c_1 = 1 bit-exactly.
NormalizedFunction from_schwarz(Alpha alpha, const SchwarzFunction& w,
                                int order);

/// The ratio q = zf'(z)/f(z) with the shared factor z cancelled structurally,
/// so the division is by a series with unit constant term; q(0) = 1.
TruncatedSeries starlike_ratio(const NormalizedFunction& f);

/// Recovers a_2..a_{m+1} from the ratio coefficients A_1..A_m of q - 1 via
///   a_n = (A_{n-1} + a_2 A_{n-2} + ... + a_{n-1} A_1) / (n - 1),
/// the recursion obtained by equating coefficients in q f = z f'.
std::vector<Complex> coefficients_from_ratio(
    const std::vector<Complex>& ratio_tail);

}  // namespace stripstar
