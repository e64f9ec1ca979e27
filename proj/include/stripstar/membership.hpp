#pragma once

#include <variant>
#include <vector>

#include "stripstar/function_factory.hpp"
#include "stripstar/strip_kernel.hpp"

namespace stripstar {

/// Target regions for the ratio w = zf'(z)/f(z). Each carries the parameters
/// of its defining inequality.
struct StripRegion {
  Alpha alpha;
};

struct StarlikeRegion {
  double beta;  // Re w > beta, beta in [0, 1)
  explicit StarlikeRegion(double beta);
};

struct StronglyStarlikeRegion {
  double gamma;  // |arg w| <= pi gamma / 2, gamma in (0, 1]
  explicit StronglyStarlikeRegion(double gamma);
};

struct ParabolicRegion {};   // v^2 < 2u - 1
struct LemniscateRegion {};  // (u^2 + v^2)^2 < 2 (u^2 - v^2)

using RegionPredicate = std::variant<StripRegion, StarlikeRegion,
                                     StronglyStarlikeRegion, ParabolicRegion,
                                     LemniscateRegion>;

/// Signed margin of a ratio value: positive strictly inside the region,
/// zero on its boundary, negative outside. The strip and starlike margins
/// are Euclidean distances; the parabolic and lemniscate margins are the
/// defining polynomials' slack.
double margin(const RegionPredicate& predicate, Complex ratio_value);

struct MembershipReport {
  RegionPredicate predicate;
  double radius;
  int samples;
  double worst_margin;
  Complex witness;  // sample point on |z| = radius attaining worst_margin
};

/// Evaluates q = zf'/f at equally spaced points on |z| = r and reports the
/// worst margin against the predicate. Requires 0 < r <= 1 - 1e-9 and
/// samples >= 8. Finite-sample evidence only; a positive worst margin is not
/// a membership proof.
MembershipReport test_membership(const NormalizedFunction& f,
                                 const RegionPredicate& predicate, double r,
                                 int samples = 720);

/// Attained extremes of q on |z| = r together with the sharp class bounds.
struct EnvelopeReport {
  double re_lower_bound;
  double re_upper_bound;
  double im_bound;
  double attained_re_min;
  double attained_re_max;
  double attained_im_max;
};

/// Checks the sharp envelope for certified members: every sample of q on
/// |z| = r must satisfy the class real-part bracket and imaginary-part bound
/// within `slack`. Throws BoundViolation (with the witness in the message)
/// on failure; returns the attained extremes for sharpness inspection.
EnvelopeReport envelope_check(const NormalizedFunction& f, Alpha alpha,
                              double r, int samples = 720,
                              double slack = 1e-9);

/// Result of scanning |zf'(z) - (1 + c(theta)) f(z)| over a theta grid and a
/// z grid, where c(theta) is the strip map's boundary value. Member functions
/// must keep the minimum strictly positive. The same quantity is evaluated a
/// second time through the Hadamard-product kernel
///   n-th coefficient (n - 1) - c(theta)
/// and the largest disagreement between the two routes is reported.
struct ConvolutionScan {
  double min_modulus;
  double theta_at_min;
  Complex z_at_min;
  double max_route_disagreement;
};

/// Thetas must lie in (0, 2 pi) with theta - alpha != pi (tolerance 1e-9;
/// violators raise ExcludedTheta). The z grid spans radial_steps circles with
/// |z| in [0.05, r], each sampled at angular_steps points; z = 0 is excluded
/// since normalization makes the expression vanish there identically.
/// Requires 0 < r < 1.
ConvolutionScan convolution_min_modulus(const NormalizedFunction& f,
                                        Alpha alpha,
                                        const std::vector<double>& thetas,
                                        double r, int radial_steps = 8,
                                        int angular_steps = 32);

/// Midpoint grid of n angles in (0, 2 pi); midpoints avoid the boundary
/// singularities at theta = pi +- alpha for the alphas of interest.
std::vector<double> default_theta_grid(int n = 360);

/// Screening result for the sufficient condition "1 + zf''/f' subordinate to
/// 1 + strip map implies membership". Exact subordination of the left side
/// admits no finite test, so the hypothesis is screened by the strip
/// real-part bounds (a necessary condition); screening_only records that.
struct SufficiencyReport {
  bool hypothesis_holds;
  double hypothesis_worst_margin;
  Complex hypothesis_witness;
  bool conclusion_holds;
  double conclusion_worst_margin;
  Complex conclusion_witness;
  bool screening_only = true;
};

/// Samples 1 + zf''/f' and q = zf'/f on |z| = r against the strip bounds.
/// Throws DerivativeVanishes if |f'| < 1e-9 at any sample point.
SufficiencyReport sufficiency_check(const NormalizedFunction& f, Alpha alpha,
                                    double r, int samples = 720);

}  // namespace stripstar
