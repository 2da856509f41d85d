#pragma once

/**
 * @file geomopt.hpp
 * @brief Source-geometry optimization at fixed wave-packet separation.
 *
 * With identical spheres the only shape parameter is L/R; ρ and R drop out of
 * ΔU/(Gρs²), and s fixes the absolute scale.
 */

#include <utility>
#include <vector>

namespace gravab {

struct GeometryResult {
  double L_over_R = 0.0;
  double s_over_R = 0.0;
  double coefficient = 0.0;  // ΔU / (G ρ s²)
  double L = 0.0;            // [m]
  double R = 0.0;            // [m]
  double s = 0.0;            // [m]
  double density = 0.0;      // [kg/m³]
  double delta_u = 0.0;      // [m²/s²]
  int iterations = 0;
};

/// s/R and ΔU/(Gρs²) for one L/R.
struct RatioEvaluation {
  double L_over_R = 0.0;
  double s_over_R = 0.0;
  double coefficient = 0.0;
};

inline constexpr double kSearchLow = 2.05;
inline constexpr double kSearchHigh = 6.0;
inline constexpr double kSearchWidth = 1e-4;

/// Throws overlap for L/R <= 2, no-saddle when the inner saddle is not
/// resolved. radius and density default to 1 and do not affect the result.
RatioEvaluation evaluate_ratio(double L_over_R, double radius = 1.0, double density = 1.0);

double coefficient_for_ratio(double L_over_R, double radius = 1.0, double density = 1.0);

/// Golden-section maximization of the coefficient over L/R in
/// [kSearchLow, kSearchHigh] to interval width kSearchWidth.
/// Throws invalid-input for non-positive s or ρ and optimization-failed when
/// the objective is monotone on the bracket or shows a second interior dip.
GeometryResult optimize_geometry(double s, double density);

/// Uniform scan of the coefficient, inclusive of both ends.
std::vector<RatioEvaluation> scan_ratios(double lo, double hi, int samples);

}  // namespace gravab
