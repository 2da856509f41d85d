#pragma once

/**
 * @file gravfield.hpp
 * @brief Newtonian field of superposed uniform-density spheres.
 *
 * Sign convention: U <= 0 for the source masses and U -> 0 at infinity, so the
 * force on a test mass m is -m ∇U. The optional Earth term adds
 * g_earth (axis · x), i.e. the axis points "up".
 *
 * Points are treated as ideal point clocks: a wave packet is assumed much
 * smaller than the sources. Interior points use the interior solution; no
 * bore through the sphere is modeled.
 */

#include <Eigen/Core>
#include <vector>

#include "gravab/constants.hpp"

namespace gravab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct SphereSource {
  Vec3 center = Vec3::Zero();  // [m]
  double radius = 0.0;         // [m]
  double density = 0.0;        // [kg/m³]

  double mass() const;
};

struct FieldSample {
  Vec3 point = Vec3::Zero();
  double potential = 0.0;        // [m²/s²]
  Vec3 gradient = Vec3::Zero();  // [m/s²]
  Mat3 hessian = Mat3::Zero();   // [s⁻²]
};

/// Validated, immutable set of source spheres plus an optional uniform Earth
/// term. Spheres may touch but not overlap (tolerance 1e-12 m); exact
/// duplicates are rejected separately.
class SourceConfiguration {
 public:
  static constexpr double kOverlapTolerance = 1e-12;  // [m]

  explicit SourceConfiguration(std::vector<SphereSource> spheres, bool include_earth = false,
                               Vec3 earth_axis = Vec3::UnitX(),
                               double g_earth = constants::g_earth);

  /// Two identical spheres centered at ±L/2 on the x-axis.
  static SourceConfiguration symmetric_pair(double separation, double radius, double density);

  const std::vector<SphereSource>& spheres() const { return spheres_; }
  bool include_earth() const { return include_earth_; }
  const Vec3& earth_axis() const { return earth_axis_; }
  double g_earth() const { return g_earth_; }

  SourceConfiguration with_earth(bool include, double g_earth = constants::g_earth) const;

  /// Density of the sphere containing the point (r < R), 0 outside all spheres.
  double local_density(const Vec3& point) const;

  /// Max over spheres of (4π/3) G ρ R, the surface gravity of the strongest
  /// sphere [m/s²].
  double gradient_scale() const;

  /// 4π G ρ_max [s⁻²].
  double curvature_scale() const;

  /// True for exactly two equal spheres centered at ±x on the x-axis.
  bool is_symmetric_axial_pair() const;

 private:
  std::vector<SphereSource> spheres_;
  bool include_earth_;
  Vec3 earth_axis_;
  double g_earth_;
};

/// Potential of one sphere: -GM/r outside, -GM(3R²-r²)/(2R³) inside.
double sphere_potential(const Vec3& point, const SphereSource& sphere);

/// Potential, gradient and Hessian of a single sphere.
FieldSample sphere_field(const Vec3& point, const SphereSource& sphere);

/// Sum of sphere fields plus the Earth term when enabled.
FieldSample field_sample(const Vec3& point, const SourceConfiguration& config);

/// Potential of the source masses only (Earth term never included).
double source_potential(const Vec3& point, const SourceConfiguration& config);

/// Source-mass field only (Earth term never included).
FieldSample source_field(const Vec3& point, const SourceConfiguration& config);

/// U(xA) - U(xB) from the source masses; positive when xA sits higher.
double potential_difference(const SourceConfiguration& config, const Vec3& xA, const Vec3& xB);

}  // namespace gravab
