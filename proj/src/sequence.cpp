#include "gravab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gravab/error.hpp"
#include "gravab/quadrature.hpp"

namespace gravab {

namespace {

constexpr double kC2 = constants::c * constants::c;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::invalid_input, message);
}

}  // namespace

// --- Segment ---------------------------------------------------------------

Segment Segment::hold(const Vec3& position, double duration) {
  return Segment{Kind::hold, position, position, duration, std::nullopt};
}

Segment Segment::ramp(const Vec3& from, const Vec3& to, double duration) {
  return Segment{Kind::ramp, from, to, duration, std::nullopt};
}

Segment Segment::shaken(double amplitude, double angular_frequency, const Vec3& direction) const {
  if (!(angular_frequency > 0.0) || !std::isfinite(amplitude) || !(direction.norm() > 0.0)) {
    invalid("shake needs ω > 0, finite amplitude and a nonzero direction");
  }
  Segment out = *this;
  out.shake = Shake{amplitude, angular_frequency, direction.normalized()};
  return out;
}

Vec3 Segment::position(double local_t) const {
  Vec3 p = from;
  if (kind == Kind::ramp && duration > 0.0) p += (to - from) * (local_t / duration);
  if (kind == Kind::ramp && duration == 0.0) p = to;
  if (shake) p += shake->amplitude * std::sin(shake->angular_frequency * local_t) * shake->direction;
  return p;
}

Vec3 Segment::velocity(double local_t) const {
  Vec3 v = Vec3::Zero();
  if (kind == Kind::ramp && duration > 0.0) v = (to - from) / duration;
  if (shake) {
    v += shake->amplitude * shake->angular_frequency *
         std::cos(shake->angular_frequency * local_t) * shake->direction;
  }
  return v;
}

// --- Trajectory ------------------------------------------------------------

Trajectory::Trajectory(double start_time, std::vector<Segment> segments)
    : start_(start_time), end_(start_time), segments_(std::move(segments)) {
  if (segments_.empty()) invalid("trajectory needs at least one segment");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!(s.duration >= 0.0) || !std::isfinite(s.duration)) {
      invalid("segment durations must be finite and non-negative");
    }
    end_ += s.duration;
    if (i + 1 < segments_.size()) {
      const Vec3 gap = s.position(s.duration) - segments_[i + 1].position(0.0);
      if (gap.norm() > kContinuityTolerance) {
        invalid("trajectory is discontinuous at segment " + std::to_string(i + 1));
      }
    }
  }
}

std::pair<const Segment*, double> Trajectory::locate(double t) const {
  double seg_start = start_;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double seg_end = seg_start + segments_[i].duration;
    if (t < seg_end || i + 1 == segments_.size()) {
      return {&segments_[i], std::clamp(t - seg_start, 0.0, segments_[i].duration)};
    }
    seg_start = seg_end;
  }
  return {&segments_.back(), segments_.back().duration};
}

Vec3 Trajectory::position(double t) const {
  const auto [seg, local] = locate(t);
  return seg->position(local);
}

Vec3 Trajectory::velocity(double t) const {
  const auto [seg, local] = locate(t);
  return seg->velocity(local);
}

std::vector<double> Trajectory::boundaries() const {
  std::vector<double> out{start_};
  double t = start_;
  for (const auto& s : segments_) {
    t += s.duration;
    out.push_back(t);
  }
  return out;
}

Trajectory Trajectory::reversed() const {
  std::vector<Segment> rev;
  rev.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    Segment s = *it;
    std::swap(s.from, s.to);
    if (s.shake) {
      // A sin(ω(d - τ)) = -cos(ωd) A sin(ωτ) when sin(ωd) = 0 (continuity).
      if (std::cos(s.shake->angular_frequency * s.duration) > 0.0) {
        s.shake->direction = -s.shake->direction;
      }
    }
    rev.push_back(s);
  }
  return Trajectory(start_, std::move(rev));
}

// --- MassSchedule ----------------------------------------------------------

double MassSchedule::weight(double t) const {
  switch (mode) {
    case Mode::absent: return 0.0;
    case Mode::always_on: return 1.0;
    case Mode::interval: break;
  }
  if (t < t_on || t > t_off) return 0.0;
  if (ramp > 0.0) {
    if (t < t_on + ramp) return (t - t_on) / ramp;
    if (t > t_off - ramp) return (t_off - t) / ramp;
  }
  return 1.0;
}

std::vector<double> MassSchedule::kinks() const {
  if (mode != Mode::interval) return {};
  std::vector<double> out{t_on, t_off};
  if (ramp > 0.0) {
    out.push_back(t_on + ramp);
    out.push_back(t_off - ramp);
  }
  return out;
}

// --- SequenceParams --------------------------------------------------------

void SequenceParams::validate() const {
  if (!(t0 < t1 && t1 <= t2 && t2 < t3)) invalid("sequence timing needs t0 < t1 <= t2 < t3");
  const double time_tol = 1e-12 * std::max(1.0, std::abs(t3 - t0));
  for (const Trajectory* arm : {&arm_a, &arm_b}) {
    if (arm->segments().empty()) invalid("both arms need a trajectory");
    if (std::abs(arm->start_time() - t0) > time_tol || std::abs(arm->end_time() - t3) > time_tol) {
      invalid("arm trajectories must span [t0, t3]");
    }
  }
  if ((arm_a.position(t0) - arm_b.position(t0)).norm() > Trajectory::kContinuityTolerance ||
      (arm_a.position(t3) - arm_b.position(t3)).norm() > Trajectory::kContinuityTolerance) {
    invalid("arms must start and end at the same point");
  }
  if (masses.mode == MassSchedule::Mode::interval) {
    if (!(masses.t_on <= masses.t_off) || !(masses.ramp >= 0.0) ||
        2.0 * masses.ramp > masses.t_off - masses.t_on) {
      invalid("mass interval needs t_on <= t_off and 2*ramp <= t_off - t_on");
    }
  }
}

SequenceParams SequenceParams::reversed() const {
  SequenceParams out = *this;
  const double mirror = t0 + t3;
  out.t1 = mirror - t2;
  out.t2 = mirror - t1;
  out.arm_a = arm_a.reversed();
  out.arm_b = arm_b.reversed();
  if (masses.mode == MassSchedule::Mode::interval) {
    out.masses.t_on = mirror - masses.t_off;
    out.masses.t_off = mirror - masses.t_on;
  }
  return out;
}

SequenceParams make_hold_sequence(const HoldSequenceSpec& spec) {
  if (!(spec.transport_time > 0.0)) invalid("transport time must be positive");
  if (!(spec.hold_time >= 0.0)) invalid("hold time must be non-negative");
  const Vec3 mid = 0.5 * (spec.x_a + spec.x_b);
  const double tau = spec.transport_time;
  const double hold = spec.hold_time;

  auto arm = [&](const Vec3& x, const std::optional<ShakingParams>& shake) {
    std::vector<Segment> segs{Segment::ramp(mid, x, tau)};
    if (shake && shake->duration > 0.0) {
      if (shake->duration > hold) invalid("shake duration exceeds the hold time");
      segs.push_back(
          Segment::hold(x, shake->duration).shaken(shake->amplitude, shake->angular_frequency));
      if (hold - shake->duration > 0.0) segs.push_back(Segment::hold(x, hold - shake->duration));
    } else if (hold > 0.0) {
      segs.push_back(Segment::hold(x, hold));
    }
    segs.push_back(Segment::ramp(x, mid, tau));
    return Trajectory(0.0, std::move(segs));
  };

  SequenceParams seq;
  seq.t0 = 0.0;
  seq.t1 = tau;
  seq.t2 = tau + hold;
  seq.t3 = seq.t2 + tau;
  seq.arm_a = arm(spec.x_a, std::nullopt);
  seq.arm_b = arm(spec.x_b, spec.shake_b);
  switch (spec.mass_mode) {
    case MassSchedule::Mode::absent: seq.masses = MassSchedule::absent(); break;
    case MassSchedule::Mode::interval:
      seq.masses = MassSchedule::interval(seq.t1, seq.t2, spec.mass_ramp);
      break;
    case MassSchedule::Mode::always_on: seq.masses = MassSchedule::always_on(); break;
  }
  seq.validate();
  return seq;
}

// --- proper time -----------------------------------------------------------

namespace {

struct ArmPiece {
  const Segment* segment;
  double start;

  Vec3 position(double t) const { return segment->position(t - start); }
  Vec3 velocity(double t) const { return segment->velocity(t - start); }
};

ArmPiece piece_at(const Trajectory& arm, double t) {
  const auto [seg, local] = arm.locate(t);
  return {seg, t - local};
}

void add_shake_breaks(const Trajectory& arm, std::vector<double>& breaks) {
  double start = arm.start_time();
  for (const auto& s : arm.segments()) {
    if (s.shake) {
      const double half_period = std::numbers::pi / s.shake->angular_frequency;
      const auto panels = static_cast<long>(std::floor(s.duration / half_period));
      for (long k = 1; k <= panels; ++k) breaks.push_back(start + k * half_period);
    }
    start += s.duration;
  }
}

}  // namespace

ProperTimeDifference proper_time_difference(const SequenceParams& seq,
                                            const SourceConfiguration& config,
                                            double abs_tolerance) {
  seq.validate();
  std::vector<double> breaks{seq.t0, seq.t3};
  for (const Trajectory* arm : {&seq.arm_a, &seq.arm_b}) {
    for (double t : arm->boundaries()) breaks.push_back(t);
    add_shake_breaks(*arm, breaks);
  }
  for (double t : seq.masses.kinks()) breaks.push_back(t);
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double t) { return !(t >= seq.t0 && t <= seq.t3); }),
               breaks.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const double span = seq.t3 - seq.t0;
  const Vec3 earth_dir = config.include_earth() ? Vec3(config.g_earth() * config.earth_axis())
                                                : Vec3::Zero();

  ProperTimeDifference out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (!(b > a)) continue;
    const double tm = 0.5 * (a + b);
    const ArmPiece pa = piece_at(seq.arm_a, tm);
    const ArmPiece pb = piece_at(seq.arm_b, tm);
    const double w_lo = seq.masses.weight(a + 0.25 * (b - a));
    const double w_hi = seq.masses.weight(b - 0.25 * (b - a));

    if (pa.segment->is_static() && pb.segment->is_static() && w_lo == w_hi) {
      const Vec3 xa = pa.segment->from;
      const Vec3 xb = pb.segment->from;
      if (w_lo != 0.0) {
        out.source_mass += w_lo * (source_potential(xa, config) - source_potential(xb, config)) *
                           (b - a) / kC2;
      }
      out.background += earth_dir.dot(xa - xb) * (b - a) / kC2;
      continue;
    }

    QuadratureOptions opts;
    opts.abs_tolerance = abs_tolerance * (b - a) / span;
    auto integrate = [&](const std::function<double(double)>& f) {
      const QuadratureResult r = adaptive_simpson(f, a, b, opts);
      out.error_estimate += r.error_estimate;
      out.evaluations += r.evaluations;
      return r.value;
    };

    if (w_lo != 0.0 || w_hi != 0.0) {
      out.source_mass += integrate([&](double t) {
        const double w = seq.masses.weight(t);
        if (w == 0.0) return 0.0;
        return w *
               (source_potential(pa.position(t), config) -
                source_potential(pb.position(t), config)) /
               kC2;
      });
    }
    if (config.include_earth()) {
      out.background += integrate(
          [&](double t) { return earth_dir.dot(pa.position(t) - pb.position(t)) / kC2; });
    }
    if (!(pa.segment->is_static() && pb.segment->is_static())) {
      out.kinetic += integrate([&](double t) {
        return -(pa.velocity(t).squaredNorm() - pb.velocity(t).squaredNorm()) / (2.0 * kC2);
      });
    }
  }
  return out;
}

// --- phases ----------------------------------------------------------------

InterferometerResult total_phase(const SequenceParams& seq, const SourceConfiguration& config,
                                 const AtomSpecies& species, std::span<const double> extra_phases) {
  const double omega_c = compton_angular_frequency(species);
  InterferometerResult r;
  r.proper_time = proper_time_difference(seq, config);
  r.phi_g = omega_c * r.proper_time.source_mass;
  r.phi_background = omega_c * r.proper_time.background;
  r.phi_kinetic = omega_c * r.proper_time.kinetic;
  for (double p : extra_phases) r.phi_extra += p;
  r.delta_phi_total = r.phi_g + r.phi_background + r.phi_kinetic + r.phi_extra;
  const double c = std::cos(0.5 * r.delta_phi_total);
  r.population = std::clamp(c * c, 0.0, 1.0);
  return r;
}

double differential_protocol(const SequenceParams& with_masses,
                             const SequenceParams& without_masses,
                             const SourceConfiguration& config, const AtomSpecies& species,
                             std::span<const double> extra_phases) {
  const bool same_timing = with_masses.t0 == without_masses.t0 &&
                           with_masses.t1 == without_masses.t1 &&
                           with_masses.t2 == without_masses.t2 &&
                           with_masses.t3 == without_masses.t3;
  if (!same_timing || !(with_masses.arm_a == without_masses.arm_a) ||
      !(with_masses.arm_b == without_masses.arm_b)) {
    throw Error(ErrorCode::protocol_mismatch,
                "with/without sequences may differ only in their mass schedule");
  }
  const InterferometerResult on = total_phase(with_masses, config, species, extra_phases);
  const InterferometerResult off = total_phase(without_masses, config, species, extra_phases);
  return (on.phi_g - off.phi_g) + (on.phi_background - off.phi_background) +
         (on.phi_kinetic - off.phi_kinetic) + (on.phi_extra - off.phi_extra);
}

PhaseScan phase_vs_T_scan(const HoldSequenceSpec& spec, const SourceConfiguration& config,
                          const AtomSpecies& species, std::span<const double> hold_times) {
  if (hold_times.empty()) invalid("scan needs at least one hold time");
  PhaseScan scan;
  for (double T : hold_times) {
    HoldSequenceSpec with = spec;
    with.hold_time = T;
    if (with.mass_mode == MassSchedule::Mode::absent) with.mass_mode = MassSchedule::Mode::interval;
    HoldSequenceSpec without = with;
    without.mass_mode = MassSchedule::Mode::absent;
    scan.hold_times.push_back(T);
    scan.phi_g.push_back(differential_protocol(make_hold_sequence(with),
                                               make_hold_sequence(without), config, species));
  }

  const auto n = static_cast<double>(hold_times.size());
  double mean_t = 0.0, mean_p = 0.0;
  for (std::size_t i = 0; i < scan.hold_times.size(); ++i) {
    mean_t += scan.hold_times[i];
    mean_p += scan.phi_g[i];
  }
  mean_t /= n;
  mean_p /= n;
  double stt = 0.0, stp = 0.0;
  for (std::size_t i = 0; i < scan.hold_times.size(); ++i) {
    stt += (scan.hold_times[i] - mean_t) * (scan.hold_times[i] - mean_t);
    stp += (scan.hold_times[i] - mean_t) * (scan.phi_g[i] - mean_p);
  }
  if (stt > 0.0) {
    scan.slope = stp / stt;
    scan.intercept = mean_p - scan.slope * mean_t;
  } else {
    scan.slope = mean_t != 0.0 ? mean_p / mean_t : 0.0;
    scan.intercept = 0.0;
  }
  for (std::size_t i = 0; i < scan.hold_times.size(); ++i) {
    const double fit = scan.intercept + scan.slope * scan.hold_times[i];
    scan.max_residual = std::max(scan.max_residual, std::abs(scan.phi_g[i] - fit));
  }
  return scan;
}

}  // namespace gravab
