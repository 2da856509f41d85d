#include "gravab/geomopt.hpp"

#include <cmath>

#include "gravab/constants.hpp"
#include "gravab/error.hpp"
#include "gravab/stationary.hpp"

namespace gravab {

RatioEvaluation evaluate_ratio(double L_over_R, double radius, double density) {
  if (!(L_over_R > 2.0)) {
    throw Error(ErrorCode::overlap, "L/R must exceed 2 for non-overlapping spheres");
  }
  const auto config = SourceConfiguration::symmetric_pair(L_over_R * radius, radius, density);
  const AxialSaddles saddles = axial_saddles(config);
  const double s = saddles.separation();
  return {L_over_R, s / radius, saddles.delta_u() / (constants::G * density * s * s)};
}

double coefficient_for_ratio(double L_over_R, double radius, double density) {
  return evaluate_ratio(L_over_R, radius, density).coefficient;
}

GeometryResult optimize_geometry(double s, double density) {
  if (!(s > 0.0) || !(density > 0.0)) {
    throw Error(ErrorCode::invalid_input, "s and density must be positive");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kSearchLow;
  double b = kSearchHigh;
  const double fa = coefficient_for_ratio(a);
  const double fb = coefficient_for_ratio(b);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = coefficient_for_ratio(c);
  double fd = coefficient_for_ratio(d);
  double flo = fa;
  double fhi = fb;

  int iterations = 0;
  while (b - a > kSearchWidth) {
    if ((fc < flo && fc < fd) || (fd < fhi && fd < fc)) {
      throw Error(ErrorCode::optimization_failed, "objective is not unimodal on the bracket");
    }
    if (fc >= fd) {
      b = d;
      fhi = fd;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = coefficient_for_ratio(c);
    } else {
      a = c;
      flo = fc;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = coefficient_for_ratio(d);
    }
    ++iterations;
  }
  if (a <= kSearchLow + kSearchWidth || b >= kSearchHigh - kSearchWidth) {
    throw Error(ErrorCode::optimization_failed,
                "maximum sits on the edge of the L/R bracket (monotone objective)");
  }

  const RatioEvaluation best = evaluate_ratio(0.5 * (a + b));
  GeometryResult result;
  result.L_over_R = best.L_over_R;
  result.s_over_R = best.s_over_R;
  result.coefficient = best.coefficient;
  result.s = s;
  result.density = density;
  result.R = s / best.s_over_R;
  result.L = best.L_over_R * result.R;
  result.delta_u = best.coefficient * constants::G * density * s * s;
  result.iterations = iterations;
  return result;
}

std::vector<RatioEvaluation> scan_ratios(double lo, double hi, int samples) {
  if (samples < 2 || !(hi > lo)) {
    throw Error(ErrorCode::invalid_input, "scan needs at least two samples and hi > lo");
  }
  std::vector<RatioEvaluation> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double ratio = lo + (hi - lo) * i / (samples - 1);
    out.push_back(evaluate_ratio(ratio));
  }
  return out;
}

}  // namespace gravab
