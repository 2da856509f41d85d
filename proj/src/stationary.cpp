#include "gravab/stationary.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "gravab/error.hpp"
#include "gravab/field_kernels.hpp"

namespace gravab {

namespace {

constexpr double kResidualFactor = 1e-12;
constexpr double kDegenerateFactor = 1e-9;
constexpr double kBisectionWidth = 1e-12;  // [m]
constexpr int kMaxNewton3d = 50;

struct AxialDerivs {
  double slope;      // ∂U/∂x
  double curvature;  // ∂²U/∂x²
};

AxialDerivs axial_derivs(double x, const SourceConfiguration& config) {
  const FieldSample f = source_field(Vec3(x, 0.0, 0.0), config);
  return {f.gradient.x(), f.hessian(0, 0)};
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection on a sign-changing bracket, then Newton polish kept inside it.
double solve_axial_root(double lo, double hi, const SourceConfiguration& config,
                        double bound) {
  int sign_lo = sign(axial_derivs(lo, config).slope);
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign(axial_derivs(mid, config).slope);
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  AxialDerivs d = axial_derivs(x, config);
  for (int iter = 0; iter < 30 && std::abs(d.slope) > bound; ++iter) {
    if (d.curvature == 0.0) break;
    const double next = x - d.slope / d.curvature;
    if (!(next >= lo && next <= hi)) break;
    const AxialDerivs dn = axial_derivs(next, config);
    if (std::abs(dn.slope) >= std::abs(d.slope)) break;
    x = next;
    d = dn;
  }
  return x;
}

}  // namespace

std::string_view kind_name(StationaryKind kind) {
  switch (kind) {
    case StationaryKind::minimum: return "minimum";
    case StationaryKind::maximum: return "maximum";
    case StationaryKind::saddle: return "saddle";
  }
  return "unknown";
}

double stationary_residual_bound(const SourceConfiguration& config) {
  return kResidualFactor * config.gradient_scale();
}

double degenerate_eigenvalue_tolerance(const SourceConfiguration& config) {
  return kDegenerateFactor * config.curvature_scale();
}

StationaryPoint classify(const Vec3& point, const SourceConfiguration& config) {
  const FieldSample f = field_sample(point, config);
  const double residual = f.gradient.norm();
  if (!(residual <= stationary_residual_bound(config))) {
    throw Error(ErrorCode::not_stationary,
                "gradient residual " + std::to_string(residual) + " m/s^2 exceeds bound");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> solver(f.hessian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical_failure, "Hessian eigen-decomposition failed");
  }

  StationaryPoint sp;
  sp.position = point;
  sp.potential = f.potential;
  sp.hessian_eigenvalues = solver.eigenvalues();
  sp.gradient_residual = residual;

  const double tol = degenerate_eigenvalue_tolerance(config);
  int positive = 0;
  int negative = 0;
  for (int i = 0; i < 3; ++i) {
    const double lambda = sp.hessian_eigenvalues[i];
    if (std::abs(lambda) < tol) sp.degenerate = true;
    if (lambda > 0.0) ++positive;
    if (lambda < 0.0) ++negative;
  }
  if (positive == 3) {
    sp.kind = StationaryKind::minimum;
  } else if (negative == 3) {
    sp.kind = StationaryKind::maximum;
  } else {
    sp.kind = StationaryKind::saddle;
  }
  return sp;
}

std::vector<StationaryPoint> find_axial_stationary_points(const SourceConfiguration& config) {
  if (!config.is_symmetric_axial_pair() || config.include_earth()) {
    throw Error(ErrorCode::unsupported_configuration,
                "axial search needs a symmetric x-axis sphere pair without the Earth term");
  }
  const double half = std::abs(config.spheres()[0].center.x());
  const double length = 2.0 * half;
  const double bound = stationary_residual_bound(config);

  const int n = kAxialGridSamples;
  const double step = length / (n + 1);
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = -half + (i + 1) * step;
  const kernels::FieldBatch grid = kernels::axial_batch(config, xs);

  std::vector<double> roots{0.0};
  for (int i = 0; i < n; ++i) {
    const double gi = grid.grad_x[i];
    if (gi == 0.0 && xs[i] != 0.0) roots.push_back(xs[i]);
    if (i + 1 == n) break;
    const double gj = grid.grad_x[i + 1];
    if (sign(gi) * sign(gj) < 0) {
      if (xs[i] < 0.0 && xs[i + 1] > 0.0) continue;  // the center, already listed
      roots.push_back(solve_axial_root(xs[i], xs[i + 1], config, bound));
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<StationaryPoint> points;
  points.reserve(roots.size());
  for (const double x : roots) points.push_back(classify(Vec3(x, 0.0, 0.0), config));
  return points;
}

StationaryPoint refine_full_3d(const Vec3& seed, const SourceConfiguration& config) {
  const double bound = stationary_residual_bound(config);

  // Iterates leaving a generous box around the sources are treated as
  // diverged.
  double extent = 0.0;
  for (const auto& s : config.spheres()) extent = std::max(extent, s.center.norm() + s.radius);
  const double escape = 10.0 * std::max(extent, seed.norm());

  Vec3 x = seed;
  for (int iter = 0; iter <= kMaxNewton3d; ++iter) {
    const FieldSample f = field_sample(x, config);
    if (f.gradient.norm() <= bound) return classify(x, config);
    if (iter == kMaxNewton3d) break;
    const Eigen::FullPivLU<Mat3> lu(f.hessian);
    if (!lu.isInvertible()) break;
    x -= lu.solve(f.gradient);
    if (!x.allFinite() || x.norm() > escape) break;
  }
  throw Error(ErrorCode::no_stationary_point_found,
              "Newton iteration did not converge to a stationary point");
}

AxialSaddles axial_saddles(const SourceConfiguration& config) {
  const auto points = find_axial_stationary_points(config);
  AxialSaddles result;
  bool have_center = false;
  bool have_inner = false;
  for (const auto& p : points) {
    if (p.position.x() == 0.0) {
      result.center = p;
      have_center = true;
    } else if (p.position.x() > 0.0) {
      if (!have_inner || p.position.x() > result.inner.position.x()) result.inner = p;
      have_inner = true;
    }
  }
  if (!have_center || !have_inner) {
    throw Error(ErrorCode::no_saddle,
                "no inner saddle resolved between the sphere centers");
  }
  return result;
}

}  // namespace gravab
