#pragma once

#include <functional>
#include <optional>

#include "stripstar/strip_kernel.hpp"

namespace stripstar {

enum class TargetClass { StronglyStarlike, Parabolic, Lemniscate };

/// One of the three inclusion-radius problems: the largest r below which the
/// class envelope stays inside the target region.
struct RadiusProblem {
  TargetClass target;
  Alpha alpha;
  std::optional<double> gamma;  // only for StronglyStarlike, in (0, 1)
};

RadiusProblem strongly_starlike_problem(Alpha alpha, double gamma);
RadiusProblem parabolic_problem(Alpha alpha);
RadiusProblem lemniscate_problem(Alpha alpha);

/// Defect functions: negative while the envelope at radius r fits inside the
/// target region, positive once the governing corner escapes. Each starts
/// negative at r = 0 and becomes positive as r -> 1.
double ss_defect(double r, Alpha alpha, double gamma);
double ps_defect(double r, Alpha alpha);
/// Lemniscate defects for the two corners of the envelope rectangle
/// (real part at its upper, respectively lower, bound).
double sl_defect_upper(double r, Alpha alpha);
double sl_defect_lower(double r, Alpha alpha);

struct RootSearchOptions {
  double scan_step = 1e-3;
  double tolerance = 1e-10;
};

struct RootResult {
  double root;
  int evaluations;
};

/// First sign change of fn on (0, 1 - 1e-9], located by a forward scan at
/// scan_step resolution and refined by bisection to |interval| <= tolerance.
/// Requires fn(0) < 0; throws NoSignChange when no bracket exists.
RootResult least_positive_root(const std::function<double(double)>& fn,
                               RootSearchOptions options = {});

struct RadiusResult {
  RadiusProblem problem;
  double radius;
  /// Corner roots for the lemniscate problem (the radius is their minimum);
  /// empty otherwise.
  std::optional<double> upper_corner_root;
  std::optional<double> lower_corner_root;
  int evaluations;
};

RadiusResult solve(const RadiusProblem& problem, RootSearchOptions = {});

}  // namespace stripstar
