#pragma once

/**
 * @file stationary.hpp
 * @brief Locating and classifying zero-force points of the source potential.
 *
 * Residual bound: |∇U| <= 1e-12 * (4π/3) G ρ R, relative to the surface
 * gravity of the strongest sphere. Eigenvalues with |λ| < 1e-9 * 4π G ρ are
 * flagged degenerate.
 */

#include <string_view>
#include <vector>

#include "gravab/gravfield.hpp"

namespace gravab {

enum class StationaryKind { minimum, maximum, saddle };

std::string_view kind_name(StationaryKind kind);

struct StationaryPoint {
  Vec3 position = Vec3::Zero();
  double potential = 0.0;
  Vec3 hessian_eigenvalues = Vec3::Zero();  // ascending
  StationaryKind kind = StationaryKind::saddle;
  bool degenerate = false;
  double gradient_residual = 0.0;
};

/// Gradient residual accepted as "stationary" for this configuration.
double stationary_residual_bound(const SourceConfiguration& config);

/// Eigenvalue magnitude below which a curvature counts as degenerate.
double degenerate_eigenvalue_tolerance(const SourceConfiguration& config);

/// Number of uniform samples between the sphere centers used for bracketing.
inline constexpr int kAxialGridSamples = 10'000;

/// All stationary points on the open segment between the two centers of a
/// symmetric x-axis pair, sorted by x. x = 0 is always included.
/// Throws unsupported-configuration for anything but a symmetric axial pair
/// without the Earth term.
std::vector<StationaryPoint> find_axial_stationary_points(const SourceConfiguration& config);

/// Fills eigenvalues and kind. Throws not-stationary if |∇U| exceeds the
/// residual bound.
StationaryPoint classify(const Vec3& point, const SourceConfiguration& config);

/// Newton iteration on ∇U from a seed; at most 50 steps.
/// Throws no-stationary-point-found on divergence or non-convergence.
StationaryPoint refine_full_3d(const Vec3& seed, const SourceConfiguration& config);

/// The two interferometer holding points of a symmetric pair: the central
/// saddle x_A = 0 and the inner point at +x_B. Inside a uniform sphere the
/// inner point is a force-free minimum of U; it is picked by position, and
/// its kind is reported as classified.
struct AxialSaddles {
  StationaryPoint center;
  StationaryPoint inner;

  /// s = |x_B - x_A|.
  double separation() const { return (inner.position - center.position).norm(); }
  /// U(x_A) - U(x_B), source masses only.
  double delta_u() const { return center.potential - inner.potential; }
};

/// Throws no-saddle when no inner saddle is resolved on the axial grid.
AxialSaddles axial_saddles(const SourceConfiguration& config);

}  // namespace gravab
