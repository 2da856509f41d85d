#include "gravab/budget.hpp"

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "format.hpp"
#include "gravab/error.hpp"
#include "gravab/gravfield.hpp"
#include "gravab/stationary.hpp"

namespace gravab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOneFigureTolerance = 0.15;
constexpr double kTwoFigureTolerance = 0.05;

template <typename T>
const T& require(const std::optional<T>& field, const char* name) {
  if (!field) {
    throw Error(ErrorCode::incomplete_baseline,
                std::string("budget parameter '") + name + "' is missing");
  }
  return *field;
}

struct PaperValue {
  const char* quoted;
  double value;
  int figures;  // 0: not comparable
};

Agreement grade(double computed, const PaperValue& paper, double& tolerance) {
  tolerance = paper.figures == 1 ? kOneFigureTolerance : kTwoFigureTolerance;
  const double rel = std::abs(computed - paper.value) / std::abs(paper.value);
  if (rel > tolerance) return Agreement::discrepant;
  return paper.figures == 1 ? Agreement::rounded_match : Agreement::match;
}

}  // namespace

BudgetParams paper_baseline() {
  BudgetParams p;
  p.sphere_radius = 0.01;
  p.sphere_density = 1.0e4;
  p.sphere_separation = 0.03;
  p.arm_separation = 0.0138;
  p.species = cesium();
  p.hold_time = 1.0;
  p.lattice = LatticeParams{constants::h * 100.0e3, 852e-9, 0.5e-3, 1.0e-3};
  p.cloud = CloudParams{2.0e15, 0.016};
  p.magnetic = MagneticParams{1.0e-3, 430.0};
  p.radial_trap_frequency = kTwoPi * 0.1;
  p.g_earth = constants::g_earth;
  p.shaking = ShakingParams{0.1e-6, kTwoPi * 1.0e3, 1.0};
  return p;
}

std::string_view agreement_name(Agreement a) {
  switch (a) {
    case Agreement::match: return "match";
    case Agreement::rounded_match: return "rounded-match";
    case Agreement::discrepant: return "discrepant";
    case Agreement::derived_input: return "derived-input";
  }
  return "unknown";
}

std::vector<std::string> BudgetEntry::tags() const {
  std::vector<std::string> out;
  if (common_arm) out.emplace_back("common-arm");
  if (mass_independent) out.emplace_back("mass-independent");
  return out;
}

BudgetReport build_budget(const BudgetParams& params) {
  const double radius = require(params.sphere_radius, "sphere_radius");
  const double density = require(params.sphere_density, "sphere_density");
  const double separation = require(params.sphere_separation, "sphere_separation");
  const double s = require(params.arm_separation, "arm_separation");
  const AtomSpecies& species = require(params.species, "species");
  const double T = require(params.hold_time, "hold_time");
  const LatticeParams& lattice = require(params.lattice, "lattice");
  const CloudParams& cloud = require(params.cloud, "cloud");
  const MagneticParams& magnetic = require(params.magnetic, "magnetic");
  const double radial = require(params.radial_trap_frequency, "radial_trap_frequency");
  const double g = require(params.g_earth, "g_earth");
  require(params.shaking, "shaking");

  BudgetReport report;
  report.params = params;

  const auto config = SourceConfiguration::symmetric_pair(separation, radius, density);
  const AxialSaddles saddles = axial_saddles(config);
  report.saddle_separation = saddles.separation();
  report.delta_u = saddles.delta_u();
  report.delta_u_over_c2 = lattice_metric_shift(report.delta_u);

  // Row 8: pull of one source mass alone at the central holding point.
  const FieldSample one = sphere_field(saddles.center.position, config.spheres()[1]);
  report.single_mass_force = species.mass * one.gradient.norm();

  auto add = [&](int row, const char* label, const char* formula_id, const char* formula_text,
                 double computed, PaperValue paper, bool common, bool independent) {
    BudgetEntry e;
    e.row = row;
    e.label = label;
    e.formula_id = formula_id;
    e.formula_text = formula_text;
    e.computed_rad = computed;
    e.paper_quoted = paper.quoted;
    e.paper_rad = paper.value;
    e.common_arm = common;
    e.mass_independent = independent;
    e.agreement = grade(computed, paper, e.tolerance);
    report.entries.push_back(std::move(e));
  };

  add(1, "Gravitostatic AB", "ab_phase", "m dU T / hbar",
      ab_phase(report.delta_u, species, T), {"0.3", 0.3, 1}, false, false);
  add(2, "Earth's gravity", "earth_background_phase", "g s omega_C T / c^2",
      earth_background_phase(s, species, T, g), {"2.8x10^8", 2.8e8, 2}, false, true);
  add(3, "Lattice Shift", "lattice_common_phase", "V0 T / hbar",
      lattice_common_phase(lattice, T), {"6x10^5", 6e5, 1}, true, false);
  add(4, "Differential Lattice Shift", "lattice_differential_phase",
      "-2 V0 T x_w s / (z_R^2 hbar)", lattice_differential_phase(lattice, s, T),
      {"0+-0.02", 0.0, 0}, false, true);
  add(5, "Mean Field", "mean_field_phase", "4 pi hbar a dn T / m",
      mean_field_phase(cloud, species, T), {"0.03", 0.03, 1}, false, true);
  add(6, "Dispersive (Earth's gravity)", "force_dispersive_phase", "F^2 T / (4 k^2 V0 hbar)",
      force_dispersive_phase(species.mass * g, lattice, T).phase, {"0.26", 0.26, 0}, true,
      false);
  add(7, "Quadratic Potential Shift", "curvature_phase_estimate",
      "(2/3) pi G rho T / omega_i", curvature_phase_estimate(density, radial, T),
      {"2x10^-6", 2e-6, 1}, false, false);
  add(8, "Dispersive (field mass)", "force_dispersive_phase", "F^2 T / (4 k^2 V0 hbar)",
      force_dispersive_phase(report.single_mass_force, lattice, T).phase, {"2x10^-8", 2e-8, 0},
      false, false);
  add(9, "Magnetic Fields (1 mG)", "magnetic_phase", "2 pi 430 Hz/G^2 dB^2 T",
      magnetic_phase(magnetic, T).radians, {"2x10^-5", 2e-5, 0}, false, false);

  for (auto& e : report.entries) {
    switch (e.row) {
      case 4:
        e.agreement = Agreement::discrepant;
        e.tolerance = 0.0;
        e.note = "raw formula value; reference row is quoted as 0 +- 0.02 rad";
        break;
      case 6:
        e.agreement = Agreement::discrepant;
        e.tolerance = 0.0;
        e.note = "F = m g with the stated lattice; reference inputs not recoverable";
        break;
      case 8:
        e.agreement = Agreement::derived_input;
        e.tolerance = 0.0;
        e.note = "F = single-sphere pull at x_A; input force not stated";
        break;
      case 9:
        e.agreement = Agreement::discrepant;
        e.tolerance = 0.0;
        e.note = "radians; cycles = " + detail::format_g(magnetic_phase(magnetic, T).cycles, 3);
        break;
      default: break;
    }
  }

  VerificationMargin& m = report.margin;
  m.signal_rad = report.entries[0].computed_rad;
  m.signal_to_threshold = m.signal_rad / m.threshold_rad;
  for (int row : {7, 8, 9}) {
    m.uncancelled_systematics_rad += std::abs(report.entries[row - 1].computed_rad);
  }
  m.within_threshold = m.uncancelled_systematics_rad < m.threshold_rad;
  return report;
}

BudgetFormat parse_budget_format(std::string_view name) {
  if (name == "table" || name == "aligned-table") return BudgetFormat::table;
  if (name == "csv") return BudgetFormat::csv;
  if (name == "json") return BudgetFormat::json;
  throw Error(ErrorCode::unsupported_format, "unsupported format '" + std::string(name) + "'");
}

namespace {

std::string join_tags(const BudgetEntry& e, char sep) {
  std::string out;
  for (const auto& t : e.tags()) {
    if (!out.empty()) out += sep;
    out += t;
  }
  return out;
}

std::string render_table(const BudgetReport& r) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-3s %-30s %-28s %14s %12s %-14s %s\n", "row", "source",
                "formula", "computed_rad", "paper", "agreement", "tags");
  os << line;
  for (const auto& e : r.entries) {
    std::string marker = e.common_arm ? "*" : (e.mass_independent ? "**" : "");
    std::snprintf(line, sizeof line, "%-3d %-30s %-28s %14s %12s %-14s %s\n", e.row,
                  (e.label + marker).c_str(), e.formula_id.c_str(),
                  detail::format_g(e.computed_rad, 4).c_str(), e.paper_quoted.c_str(),
                  std::string(agreement_name(e.agreement)).c_str(), join_tags(e, ';').c_str());
    os << line;
  }
  const auto& m = r.margin;
  os << "\nsaddle separation s = " << detail::format_g(r.saddle_separation * 100.0, 6)
     << " cm, dU = " << detail::format_g(r.delta_u, 6)
     << " m^2/s^2, dU/c^2 = " << detail::format_g(r.delta_u_over_c2, 4) << "\n";
  os << "signal " << detail::format_g(m.signal_rad, 4) << " rad vs threshold "
     << detail::format_g(m.threshold_rad, 3) << " rad: "
     << detail::format_g(m.signal_to_threshold, 3) << " x; uncancelled systematics "
     << detail::format_g(m.uncancelled_systematics_rad, 3) << " rad ("
     << (m.within_threshold ? "within" : "exceeds") << " threshold)\n";
  for (const auto& e : r.entries) {
    if (!e.note.empty()) os << "note row " << e.row << ": " << e.note << "\n";
  }
  return os.str();
}

std::string render_csv(const BudgetReport& r) {
  std::ostringstream os;
  os << kBudgetCsvHeader << "\n";
  for (const auto& e : r.entries) {
    os << e.row << ',' << detail::csv_field(e.label) << ',' << detail::csv_field(e.formula_id)
       << ',' << detail::format_g(e.computed_rad, 12) << ',' << detail::format_g(e.paper_rad, 12)
       << ',' << agreement_name(e.agreement) << ',' << join_tags(e, ';') << "\n";
  }
  return os.str();
}

std::string render_json(const BudgetReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json row;
    row["row"] = e.row;
    row["label"] = e.label;
    row["formula"] = e.formula_id;
    row["computed_rad"] = e.computed_rad;
    row["paper_rad"] = e.paper_rad;
    row["agreement"] = std::string(agreement_name(e.agreement));
    row["tags"] = e.tags();
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["saddle_separation_m"] = r.saddle_separation;
  doc["delta_u_m2_s2"] = r.delta_u;
  doc["delta_u_over_c2"] = r.delta_u_over_c2;
  doc["verification"] = {{"signal_rad", r.margin.signal_rad},
                         {"threshold_rad", r.margin.threshold_rad},
                         {"signal_to_threshold", r.margin.signal_to_threshold},
                         {"uncancelled_systematics_rad", r.margin.uncancelled_systematics_rad},
                         {"within_threshold", r.margin.within_threshold}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_budget(const BudgetReport& report, BudgetFormat format) {
  switch (format) {
    case BudgetFormat::table: return render_table(report);
    case BudgetFormat::csv: return render_csv(report);
    case BudgetFormat::json: return render_json(report);
  }
  throw Error(ErrorCode::unsupported_format, "unsupported format");
}

std::string render_budget(const BudgetReport& report, std::string_view format) {
  return render_budget(report, parse_budget_format(format));
}

}  // namespace gravab
