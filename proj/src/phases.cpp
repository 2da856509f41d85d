#include "gravab/phases.hpp"

#include <cmath>
#include <numbers>

#include "gravab/error.hpp"

namespace gravab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_duration(double T) {
  if (!(T >= 0.0)) throw Error(ErrorCode::invalid_input, "duration must be non-negative");
}

}  // namespace

double LatticeParams::wavenumber() const { return 2.0 * kPi / wavelength; }

double LatticeParams::rayleigh_range() const { return kPi * waist * waist / wavelength; }

void LatticeParams::validate(bool allow_zero_depth) const {
  const bool depth_ok = allow_zero_depth ? depth >= 0.0 : depth > 0.0;
  if (!depth_ok || !(wavelength > 0.0) || !(waist > 0.0) || !std::isfinite(waist_offset)) {
    throw Error(ErrorCode::invalid_input, "lattice needs V0 > 0, λ > 0 and w0 > 0");
  }
}

double ab_phase(double delta_u, const AtomSpecies& species, double T) {
  require_duration(T);
  return species.mass * delta_u * T / constants::hbar;
}

double eq1_phase(double s, double density, const AtomSpecies& species, double T) {
  require_duration(T);
  const double s_cm = s / 0.01;
  const double rho_rel = density / 1.0e4;
  return 0.16 * s_cm * s_cm * rho_rel * (species.mass / cesium().mass) * T;
}

double earth_background_phase(double s, const AtomSpecies& species, double T, double g_earth) {
  require_duration(T);
  const double c2 = constants::c * constants::c;
  return g_earth * s * compton_angular_frequency(species) * T / c2;
}

double lattice_common_phase(const LatticeParams& lattice, double T) {
  require_duration(T);
  if (!(lattice.depth >= 0.0)) throw Error(ErrorCode::invalid_input, "V0 must be >= 0");
  return lattice.depth * T / constants::hbar;
}

double lattice_differential_phase(const LatticeParams& lattice, double s, double T) {
  require_duration(T);
  lattice.validate(true);
  const double z_r = lattice.rayleigh_range();
  return -2.0 * lattice.depth * T * lattice.waist_offset * s / (z_r * z_r * constants::hbar);
}

double mean_field_phase(const CloudParams& cloud, const AtomSpecies& species, double T) {
  require_duration(T);
  if (!(cloud.density >= 0.0) || !(std::abs(cloud.density_asymmetry) <= 1.0)) {
    throw Error(ErrorCode::invalid_input, "cloud needs n >= 0 and |Δn/n| <= 1");
  }
  if (!(species.mass > 0.0)) throw Error(ErrorCode::invalid_input, "species mass must be > 0");
  const double delta_n = cloud.density * cloud.density_asymmetry;
  return 4.0 * kPi * constants::hbar * species.scattering_length * delta_n * T / species.mass;
}

std::array<double, 3> lattice_trap_frequencies(const LatticeParams& lattice,
                                               const AtomSpecies& species,
                                               std::optional<double> radial_override) {
  lattice.validate();
  if (!(species.mass > 0.0)) throw Error(ErrorCode::invalid_input, "species mass must be > 0");
  const double axial = lattice.wavenumber() * std::sqrt(2.0 * lattice.depth / species.mass);
  double transverse = 2.0 / lattice.waist * std::sqrt(lattice.depth / species.mass);
  if (radial_override) {
    if (!(*radial_override > 0.0)) {
      throw Error(ErrorCode::invalid_input, "radial trap frequency must be > 0");
    }
    transverse = *radial_override;
  }
  return {axial, transverse, transverse};
}

double curvature_phase(const Mat3& hess_a, const Mat3& hess_b, const std::array<double, 3>& trap,
                       double T) {
  require_duration(T);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (!(trap[i] > 0.0)) {
      throw Error(ErrorCode::invalid_input, "trap frequencies must be positive");
    }
    sum += (hess_a(i, i) - hess_b(i, i)) / (2.0 * trap[i]);
  }
  return 0.5 * T * sum;
}

double curvature_phase_estimate(double density, double trap_frequency, double T) {
  require_duration(T);
  if (!(trap_frequency > 0.0)) {
    throw Error(ErrorCode::invalid_input, "trap frequency must be positive");
  }
  return 2.0 / 3.0 * kPi * constants::G * density / trap_frequency * T;
}

ForceShift force_dispersive_phase(double force, const LatticeParams& lattice, double T) {
  require_duration(T);
  lattice.validate();
  const double k2v0 = lattice.wavenumber() * lattice.wavenumber() * lattice.depth;
  return {force / (2.0 * k2v0), force * force * T / (4.0 * k2v0 * constants::hbar)};
}

MagneticPhase magnetic_phase(const MagneticParams& mag, double T) {
  require_duration(T);
  if (!(mag.quadratic_coefficient > 0.0)) {
    throw Error(ErrorCode::invalid_input, "quadratic Zeeman coefficient must be positive");
  }
  const double cycles = mag.quadratic_coefficient * mag.field_difference * mag.field_difference * T;
  return {cycles, 2.0 * kPi * cycles};
}

double time_dilation_phase(const ShakingParams& shake, const AtomSpecies& species) {
  if (!(shake.amplitude >= 0.0) || !(shake.angular_frequency > 0.0) ||
      !(shake.duration >= 0.0)) {
    throw Error(ErrorCode::invalid_input, "shaking needs A >= 0, ω > 0, T'' >= 0");
  }
  const double c2 = constants::c * constants::c;
  const double a = shake.amplitude;
  const double w = shake.angular_frequency;
  return compton_angular_frequency(species) * a * a * w * w * shake.duration / (4.0 * c2);
}

double lattice_metric_shift(double delta_u) {
  return delta_u / (constants::c * constants::c);
}

double clock_phase(double omega, double delta_tau) { return omega * delta_tau; }

}  // namespace gravab
