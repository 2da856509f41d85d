#pragma once

/**
 * @file sequence.hpp
 * @brief Interferometer timeline: arm trajectories, proper-time difference,
 * total phase, and the with/without-source-masses comparison.
 *
 * Arms are point clocks. The proper-time difference between arms A and B is
 *
 *   Δτ = ∫ [ (U_A - U_B)/c² - (|v_A|² - |v_B|²)/(2c²) ] dt
 *
 * kept as three separately integrated parts (source masses, Earth background,
 * kinetic) so the differential protocol can subtract term by term. Intervals
 * where both arms hold still and the mass weight is constant use the closed
 * form; everything else goes through adaptive Simpson with a 1e-30 s
 * absolute budget spread over the timeline.
 */

#include <optional>
#include <span>
#include <vector>

#include "gravab/constants.hpp"
#include "gravab/gravfield.hpp"
#include "gravab/phases.hpp"

namespace gravab {

/// Sinusoidal displacement A sin(ω τ) along a direction, τ measured from the
/// start of the segment it decorates.
struct Shake {
  double amplitude = 0.0;
  double angular_frequency = 0.0;
  Vec3 direction = Vec3::UnitX();

  bool operator==(const Shake&) const = default;
};

struct Segment {
  enum class Kind { hold, ramp };

  Kind kind = Kind::hold;
  Vec3 from = Vec3::Zero();
  Vec3 to = Vec3::Zero();
  double duration = 0.0;
  std::optional<Shake> shake;

  static Segment hold(const Vec3& position, double duration);
  /// Constant-velocity move.
  static Segment ramp(const Vec3& from, const Vec3& to, double duration);
  Segment shaken(double amplitude, double angular_frequency,
                 const Vec3& direction = Vec3::UnitX()) const;

  Vec3 position(double local_t) const;
  Vec3 velocity(double local_t) const;
  bool is_static() const { return kind == Kind::hold && !shake; }

  bool operator==(const Segment&) const = default;
};

/// Piecewise trajectory starting at start_time. Positions must be continuous
/// across segment boundaries to 1e-12 m.
class Trajectory {
 public:
  static constexpr double kContinuityTolerance = 1e-12;

  Trajectory() = default;
  Trajectory(double start_time, std::vector<Segment> segments);

  double start_time() const { return start_; }
  double end_time() const { return end_; }
  const std::vector<Segment>& segments() const { return segments_; }

  Vec3 position(double t) const;
  Vec3 velocity(double t) const;

  /// Segment covering t (the later one at a boundary) and the local time.
  std::pair<const Segment*, double> locate(double t) const;

  /// Absolute boundary times, including start and end.
  std::vector<double> boundaries() const;

  /// Same domain, run backwards: x'(t) = x(start + end - t).
  Trajectory reversed() const;

  bool operator==(const Trajectory&) const = default;

 private:
  double start_ = 0.0;
  double end_ = 0.0;
  std::vector<Segment> segments_;
};

/// When the source masses are in place. interval mode is the type I test
/// (masses brought in and removed), always_on the type II test. An optional
/// linear ramp of the mass weight models a finite insertion time.
struct MassSchedule {
  enum class Mode { absent, interval, always_on };

  Mode mode = Mode::absent;
  double t_on = 0.0;
  double t_off = 0.0;
  double ramp = 0.0;

  static MassSchedule absent() { return {}; }
  static MassSchedule interval(double t_on, double t_off, double ramp = 0.0) {
    return {Mode::interval, t_on, t_off, ramp};
  }
  static MassSchedule always_on() { return {Mode::always_on, 0.0, 0.0, 0.0}; }

  /// Fraction of the source-mass potential present at t, in [0, 1].
  double weight(double t) const;
  /// Times where weight() is not smooth.
  std::vector<double> kinks() const;

  bool operator==(const MassSchedule&) const = default;
};

struct SequenceParams {
  double t0 = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0;
  Trajectory arm_a;
  Trajectory arm_b;
  MassSchedule masses;

  double hold_time() const { return t2 - t1; }
  /// Throws invalid-input on inconsistent timing or an open interferometer.
  void validate() const;
  /// Time-reversed sequence over the same [t0, t3].
  SequenceParams reversed() const;
};

/// Symmetric template: both arms leave the midpoint of xA and xB at t0 with
/// equal constant speeds, hold for hold_time, and return the same way.
struct HoldSequenceSpec {
  Vec3 x_a = Vec3::Zero();
  Vec3 x_b = Vec3::Zero();
  double transport_time = 0.1;
  double hold_time = 1.0;
  MassSchedule::Mode mass_mode = MassSchedule::Mode::interval;
  double mass_ramp = 0.0;
  /// Shakes arm B for shake->duration from the start of the hold.
  std::optional<ShakingParams> shake_b;
};

SequenceParams make_hold_sequence(const HoldSequenceSpec& spec);

struct ProperTimeDifference {
  double source_mass = 0.0;  // from the source masses [s]
  double background = 0.0;   // from the Earth term [s]
  double kinetic = 0.0;      // -(|v_A|² - |v_B|²)/(2c²) part [s]
  double error_estimate = 0.0;
  long evaluations = 0;

  double potential() const { return source_mass + background; }
  double total() const { return source_mass + background + kinetic; }
};

inline constexpr double kProperTimeTolerance = 1e-30;  // [s]

/// Throws numerical-failure if quadrature cannot meet the tolerance.
ProperTimeDifference proper_time_difference(const SequenceParams& seq,
                                            const SourceConfiguration& config,
                                            double abs_tolerance = kProperTimeTolerance);

struct InterferometerResult {
  double delta_phi_total = 0.0;
  double phi_g = 0.0;           // source-mass part
  double phi_background = 0.0;  // Earth part
  double phi_kinetic = 0.0;
  double phi_extra = 0.0;
  double population = 1.0;      // cos²(Δφ/2)
  ProperTimeDifference proper_time;
};

InterferometerResult total_phase(const SequenceParams& seq, const SourceConfiguration& config,
                                 const AtomSpecies& species,
                                 std::span<const double> extra_phases = {});

/// Term-wise Δφ(with) - Δφ(without). The two sequences must be identical
/// except for their mass schedules (protocol-mismatch otherwise); the same
/// extra phases are applied to both runs.
double differential_protocol(const SequenceParams& with_masses,
                             const SequenceParams& without_masses,
                             const SourceConfiguration& config, const AtomSpecies& species,
                             std::span<const double> extra_phases = {});

struct PhaseScan {
  std::vector<double> hold_times;
  std::vector<double> phi_g;
  double slope = 0.0;      // [rad/s]
  double intercept = 0.0;  // [rad]
  double max_residual = 0.0;
};

/// φ_G from the differential protocol at each hold time, with a least-squares
/// line through the samples.
PhaseScan phase_vs_T_scan(const HoldSequenceSpec& spec, const SourceConfiguration& config,
                          const AtomSpecies& species, std::span<const double> hold_times);

}  // namespace gravab
