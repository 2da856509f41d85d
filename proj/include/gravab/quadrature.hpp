#pragma once

#include <cmath>
#include <functional>

namespace gravab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-30;
  int max_depth = 48;
  /// Levels subdivided unconditionally before the error test is trusted;
  /// guards against false convergence on periodic integrands.
  int min_depth = 3;
};

/// Adaptive Simpson with Richardson correction. Throws numerical-failure if
/// some subinterval still misses its share of the tolerance at max_depth.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options = {});

}  // namespace gravab
