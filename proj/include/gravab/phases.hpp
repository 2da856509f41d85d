#pragma once

/**
 * @file phases.hpp
 * @brief Closed-form interferometer phase shifts: the gravitostatic signal,
 * the backgrounds it must be separated from, and the systematic terms.
 *
 * All inputs SI. T is the hold time between mass insertion and removal.
 * Every function throws invalid-input for a negative duration.
 */

#include <array>
#include <optional>

#include "gravab/constants.hpp"
#include "gravab/gravfield.hpp"

namespace gravab {

/// Optical lattice -V0 cos²(kx) with a Gaussian transverse profile.
struct LatticeParams {
  double depth = 0.0;         // V0 [J]
  double wavelength = 0.0;    // λ [m]
  double waist = 0.0;         // w0, 1/e² intensity radius [m]
  double waist_offset = 0.0;  // x_w, waist position relative to the midpoint [m]

  double wavenumber() const;      // k = 2π/λ
  double rayleigh_range() const;  // z_R = π w0² / λ
  /// Throws invalid-input unless λ > 0, w0 > 0 and V0 > 0 (V0 >= 0 when
  /// allow_zero_depth).
  void validate(bool allow_zero_depth = false) const;
};

struct ShakingParams {
  double amplitude = 0.0;          // A [m]
  double angular_frequency = 0.0;  // ω [rad/s]
  double duration = 0.0;           // T'' [s]
};

struct CloudParams {
  double density = 0.0;             // n [m⁻³]
  double density_asymmetry = 0.0;   // Δn/n
};

struct MagneticParams {
  double field_difference = 0.0;        // ΔB [G]
  double quadratic_coefficient = 430.0; // [Hz/G²]
};

/// m ΔU T / ħ.
double ab_phase(double delta_u, const AtomSpecies& species, double T);

/// Rounded scaling law 0.16 (s/cm)² (ρ / 10 g cm⁻³)(m/m_Cs)(T/s), valid for
/// L = 3R, R = 0.72 s.
double eq1_phase(double s, double density, const AtomSpecies& species, double T);

/// g s ω_C T / c², the Earth potential difference across a vertical s.
double earth_background_phase(double s, const AtomSpecies& species, double T,
                              double g_earth = constants::g_earth);

/// V0 T / ħ, common to both arms.
double lattice_common_phase(const LatticeParams& lattice, double T);

/// -2 V0 T x_w s / (z_R² ħ) from the Gaussian beam's axial intensity change.
double lattice_differential_phase(const LatticeParams& lattice, double s, double T);

/// 4π ħ a Δn T / m.
double mean_field_phase(const CloudParams& cloud, const AtomSpecies& species, double T);

/// Harmonic trap frequencies [rad/s], ordered (x, y, z) with the lattice
/// axis along x: axial k sqrt(2V0/m), transverse (2/w0) sqrt(V0/m).
/// radial_override replaces both transverse values.
std::array<double, 3> lattice_trap_frequencies(const LatticeParams& lattice,
                                               const AtomSpecies& species,
                                               std::optional<double> radial_override = {});

/// (T/2) Σ_i [H_A,ii/(2ω_i) - H_B,ii/(2ω_i)]: zero-point energy shift from the
/// source-mass curvature at each arm.
double curvature_phase(const Mat3& hess_a, const Mat3& hess_b, const std::array<double, 3>& trap,
                       double T);

/// Order-of-magnitude bound (2/3) π G ρ T / ω_i.
double curvature_phase_estimate(double density, double trap_frequency, double T);

struct ForceShift {
  double displacement = 0.0;  // δx = F / (2 k² V0) [m]
  double phase = 0.0;         // F² T / (4 k² V0 ħ) [rad]
};

ForceShift force_dispersive_phase(double force, const LatticeParams& lattice, double T);

struct MagneticPhase {
  double cycles = 0.0;   // coefficient ΔB² T
  double radians = 0.0;  // 2π × cycles
};

MagneticPhase magnetic_phase(const MagneticParams& mag, double T);

/// ω_C A² ω² T'' / (4c²).
double time_dilation_phase(const ShakingParams& shake, const AtomSpecies& species);

/// ΔU / c², the fractional light-cone shift of the lattice.
double lattice_metric_shift(double delta_u);

/// ω Δτ.
double clock_phase(double omega, double delta_tau);

}  // namespace gravab
