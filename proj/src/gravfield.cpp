#include "gravab/gravfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gravab/error.hpp"

namespace gravab {

double SphereSource::mass() const {
  return 4.0 / 3.0 * std::numbers::pi * radius * radius * radius * density;
}

SourceConfiguration::SourceConfiguration(std::vector<SphereSource> spheres, bool include_earth,
                                         Vec3 earth_axis, double g_earth)
    : spheres_(std::move(spheres)),
      include_earth_(include_earth),
      earth_axis_(earth_axis),
      g_earth_(g_earth) {
  for (const auto& s : spheres_) {
    if (!(s.radius > 0.0) || !(s.density > 0.0) || !s.center.allFinite()) {
      throw Error(ErrorCode::invalid_input, "sphere radius and density must be positive");
    }
  }
  for (std::size_t i = 0; i < spheres_.size(); ++i) {
    for (std::size_t j = i + 1; j < spheres_.size(); ++j) {
      const auto& a = spheres_[i];
      const auto& b = spheres_[j];
      if (a.center == b.center && a.radius == b.radius && a.density == b.density) {
        throw Error(ErrorCode::duplicate_sphere, "duplicate sphere in configuration");
      }
      const double distance = (a.center - b.center).norm();
      if (distance < a.radius + b.radius - kOverlapTolerance) {
        throw Error(ErrorCode::overlap, "sphere volumes overlap");
      }
    }
  }
  if (include_earth_) {
    const double n = earth_axis_.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw Error(ErrorCode::invalid_input, "earth axis must be a nonzero vector");
    }
    earth_axis_ /= n;
    if (!(g_earth_ > 0.0)) {
      throw Error(ErrorCode::invalid_input, "g_earth must be positive");
    }
  }
}

SourceConfiguration SourceConfiguration::symmetric_pair(double separation, double radius,
                                                        double density) {
  if (!(separation > 0.0)) {
    throw Error(ErrorCode::invalid_input, "separation must be positive");
  }
  const double half = 0.5 * separation;
  return SourceConfiguration({SphereSource{Vec3(-half, 0.0, 0.0), radius, density},
                              SphereSource{Vec3(half, 0.0, 0.0), radius, density}});
}

SourceConfiguration SourceConfiguration::with_earth(bool include, double g_earth) const {
  return SourceConfiguration(spheres_, include, earth_axis_, g_earth);
}

double SourceConfiguration::local_density(const Vec3& point) const {
  for (const auto& s : spheres_) {
    if ((point - s.center).norm() < s.radius) return s.density;
  }
  return 0.0;
}

double SourceConfiguration::gradient_scale() const {
  double scale = 0.0;
  for (const auto& s : spheres_) {
    scale = std::max(scale, 4.0 / 3.0 * std::numbers::pi * constants::G * s.density * s.radius);
  }
  return scale;
}

double SourceConfiguration::curvature_scale() const {
  double rho = 0.0;
  for (const auto& s : spheres_) rho = std::max(rho, s.density);
  return 4.0 * std::numbers::pi * constants::G * rho;
}

bool SourceConfiguration::is_symmetric_axial_pair() const {
  if (spheres_.size() != 2) return false;
  const auto& a = spheres_[0];
  const auto& b = spheres_[1];
  return a.radius == b.radius && a.density == b.density && a.center.y() == 0.0 &&
         a.center.z() == 0.0 && b.center.y() == 0.0 && b.center.z() == 0.0 &&
         a.center.x() == -b.center.x() && a.center.x() != 0.0;
}

double sphere_potential(const Vec3& point, const SphereSource& sphere) {
  const double gm = constants::G * sphere.mass();
  const double r = (point - sphere.center).norm();
  const double big_r = sphere.radius;
  if (r >= big_r) return -gm / r;
  return -gm * (3.0 * big_r * big_r - r * r) / (2.0 * big_r * big_r * big_r);
}

FieldSample sphere_field(const Vec3& point, const SphereSource& sphere) {
  FieldSample out;
  out.point = point;
  const double gm = constants::G * sphere.mass();
  const Vec3 d = point - sphere.center;
  const double r2 = d.squaredNorm();
  const double r = std::sqrt(r2);
  const double big_r = sphere.radius;
  if (r >= big_r) {
    const double inv_r = 1.0 / r;
    const double inv_r3 = inv_r * inv_r * inv_r;
    out.potential = -gm * inv_r;
    out.gradient = gm * inv_r3 * d;
    out.hessian = gm * inv_r3 * (Mat3::Identity() - 3.0 * inv_r * inv_r * d * d.transpose());
  } else {
    const double inv_r3 = 1.0 / (big_r * big_r * big_r);
    out.potential = -gm * (3.0 * big_r * big_r - r2) * 0.5 * inv_r3;
    out.gradient = gm * inv_r3 * d;
    out.hessian = gm * inv_r3 * Mat3::Identity();
  }
  return out;
}

FieldSample source_field(const Vec3& point, const SourceConfiguration& config) {
  FieldSample total;
  total.point = point;
  for (const auto& s : config.spheres()) {
    const FieldSample one = sphere_field(point, s);
    total.potential += one.potential;
    total.gradient += one.gradient;
    total.hessian += one.hessian;
  }
  return total;
}

FieldSample field_sample(const Vec3& point, const SourceConfiguration& config) {
  FieldSample total = source_field(point, config);
  if (config.include_earth()) {
    total.potential += config.g_earth() * config.earth_axis().dot(point);
    total.gradient += config.g_earth() * config.earth_axis();
  }
  return total;
}

double source_potential(const Vec3& point, const SourceConfiguration& config) {
  double u = 0.0;
  for (const auto& s : config.spheres()) u += sphere_potential(point, s);
  return u;
}

double potential_difference(const SourceConfiguration& config, const Vec3& xA, const Vec3& xB) {
  return source_potential(xA, config) - source_potential(xB, config);
}

}  // namespace gravab
