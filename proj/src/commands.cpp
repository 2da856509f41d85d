#include "gravab/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include "format.hpp"
#include "gravab/error.hpp"
#include "gravab/field_kernels.hpp"
#include "gravab/geomopt.hpp"
#include "gravab/phases.hpp"
#include "gravab/stationary.hpp"

namespace gravab {

namespace {

using nlohmann::ordered_json;

struct Report {
  std::string command;
  std::vector<std::string> formulas;
  std::vector<std::pair<std::string, ordered_json>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell(const ordered_json& v) {
  if (v.is_number_float()) return detail::format_g(v.get<double>(), 12);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

ordered_json metadata(const Report& r, const ResolvedConfig& config) {
  ordered_json params = ordered_json::object();
  for (const auto& [key, source] : config.provenance) {
    params[key] = {{"value", config.values.at(key)}, {"source", source}};
  }
  ordered_json meta;
  meta["command"] = r.command;
  meta["formulas"] = r.formulas;
  meta["parameters"] = std::move(params);
  meta["fallbacks"] = config.fallbacks();
  if (config.timestamp) meta["timestamp"] = utc_timestamp();
  return meta;
}

std::string comment_header(const Report& r, const ResolvedConfig& config) {
  std::ostringstream os;
  os << "# gravab " << r.command << "\n";
  os << "# formulas: " << join(r.formulas, ", ") << "\n";
  std::vector<std::string> params;
  for (const auto& [key, source] : config.provenance) {
    params.push_back(key + "=" + config.values.at(key).dump() + " (" + source + ")");
  }
  os << "# parameters: " << join(params, "; ") << "\n";
  const auto fb = config.fallbacks();
  os << "# fallbacks: " << (fb.empty() ? "none" : join(fb, ", ")) << "\n";
  if (config.timestamp) os << "# timestamp: " << utc_timestamp() << "\n";
  return os.str();
}

std::string render(const Report& r, const ResolvedConfig& config) {
  const BudgetFormat format = parse_budget_format(config.format);
  if (format == BudgetFormat::json) {
    ordered_json doc;
    doc["metadata"] = metadata(r, config);
    ordered_json summary = ordered_json::object();
    for (const auto& [k, v] : r.summary) summary[k] = v;
    doc["summary"] = std::move(summary);
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
      ordered_json obj;
      for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << comment_header(r, config);
  if (format == BudgetFormat::csv) {
    for (const auto& [k, v] : r.summary) os << "# " << k << " = " << cell(v) << "\n";
    if (r.columns.empty()) return os.str();
    os << join(r.columns, ",") << "\n";
    for (const auto& row : r.rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(detail::csv_field(cell(v)));
      os << join(cells, ",") << "\n";
    }
    return os.str();
  }

  std::size_t key_width = 0;
  for (const auto& [k, v] : r.summary) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.summary) {
    os << k << std::string(key_width - k.size(), ' ') << "  " << cell(v) << "\n";
  }
  if (r.columns.empty()) return os.str();
  if (!r.summary.empty()) os << "\n";
  std::vector<std::size_t> widths;
  for (const auto& c : r.columns) widths.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell(row[i]));
      widths[i] = std::max(widths[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << "  ";
      os << std::string(widths[i] - line[i].size(), ' ') << line[i];
    }
    os << "\n";
  };
  emit(r.columns);
  for (const auto& line : cells) emit(line);
  return os.str();
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  xs.back() = hi;
  return xs;
}

}  // namespace

std::string cmd_field(const ResolvedConfig& config) {
  if (config.samples < 2) throw Error(ErrorCode::invalid_input, "sample count must be >= 2");
  const SourceConfiguration sources = config.sources();
  const double reach = config.layout == "single" ? 3.0 * config.R : 0.5 * config.L + config.R;
  const double lo = config.x_min.value_or(-reach);
  const double hi = config.x_max.value_or(reach);
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::invalid_input, "field range needs x_max > x_min");
  }
  const AtomSpecies& species = config.require_species();
  const std::vector<double> xs = grid(lo, hi, config.samples);
  const kernels::FieldBatch batch = kernels::axial_batch(sources, xs);

  Report r;
  r.command = "field";
  r.formulas = {"sphere_potential", "field_sample", "phase_rate = m U / hbar"};
  r.columns = {"x_m", "U_m2_s2", "dUdx_m_s2", "d2Udx2_s2", "phase_rate_rad_s"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r.rows.push_back({xs[i], batch.potential[i], batch.grad_x[i], batch.hess_xx[i],
                      species.mass * batch.potential[i] / constants::hbar});
  }
  return render(r, config);
}

std::string cmd_saddles(const ResolvedConfig& config) {
  const SourceConfiguration sources = config.sources();
  const auto points = find_axial_stationary_points(sources);
  const AxialSaddles saddles = axial_saddles(sources);

  Report r;
  r.command = "saddles";
  r.formulas = {"find_axial_stationary_points", "classify", "potential_difference"};
  const double s = saddles.separation();
  const double du = saddles.delta_u();
  r.summary = {{"s_m", s},
               {"s_cm", s * 100.0},
               {"delta_u_m2_s2", du},
               {"delta_u_over_c2", lattice_metric_shift(du)},
               {"coefficient_dU_over_G_rho_s2", du / (constants::G * config.density * s * s)}};
  if (config.species) {
    r.summary.emplace_back("phase_rate_rad_s", ab_phase(du, *config.species, 1.0));
  }
  r.columns = {"x_m", "U_m2_s2", "kind", "eig1_s2", "eig2_s2", "eig3_s2", "degenerate",
               "gradient_residual_m_s2"};
  for (const auto& p : points) {
    r.rows.push_back({p.position.x(), p.potential, std::string(kind_name(p.kind)),
                      p.hessian_eigenvalues[0], p.hessian_eigenvalues[1],
                      p.hessian_eigenvalues[2], p.degenerate, p.gradient_residual});
  }
  return render(r, config);
}

std::string cmd_optimize(const ResolvedConfig& config) {
  const GeometryResult g = optimize_geometry(config.s, config.density);
  Report r;
  r.command = "optimize";
  r.formulas = {"coefficient_for_ratio", "optimize_geometry (golden section)"};
  r.summary = {{"L_over_R", g.L_over_R},
               {"s_over_R", g.s_over_R},
               {"coefficient_dU_over_G_rho_s2", g.coefficient},
               {"s_m", g.s},
               {"R_m", g.R},
               {"L_m", g.L},
               {"R_cm", g.R * 100.0},
               {"L_cm", g.L * 100.0},
               {"delta_u_m2_s2", g.delta_u},
               {"iterations", g.iterations}};
  if (config.species) {
    r.summary.emplace_back("phi_g_rad", ab_phase(g.delta_u, *config.species, config.T));
  }
  return render(r, config);
}

std::string cmd_budget(const ResolvedConfig& config) {
  const BudgetReport report = build_budget(config.budget_params());
  Report meta;
  meta.command = "budget";
  for (const auto& e : report.entries) meta.formulas.push_back(e.formula_id);
  meta.formulas.erase(std::unique(meta.formulas.begin(), meta.formulas.end()),
                      meta.formulas.end());

  const BudgetFormat format = parse_budget_format(config.format);
  if (format == BudgetFormat::json) {
    ordered_json doc = ordered_json::parse(render_budget(report, BudgetFormat::json));
    doc["metadata"] = metadata(meta, config);
    return doc.dump(2) + "\n";
  }
  return comment_header(meta, config) + render_budget(report, format);
}

std::string cmd_sequence(const ResolvedConfig& config) {
  const AtomSpecies& species = config.require_species();
  const SourceConfiguration sources = config.sources();
  const AxialSaddles saddles = axial_saddles(sources);
  const SourceConfiguration field = sources.with_earth(config.include_earth, config.g_earth);

  HoldSequenceSpec spec;
  spec.x_a = saddles.center.position;
  spec.x_b = saddles.inner.position;
  spec.transport_time = config.transport_time;
  spec.hold_time = config.T;
  spec.mass_mode = config.mass_mode;
  spec.mass_ramp = config.mass_ramp;
  if (config.shake) spec.shake_b = config.shaking;

  HoldSequenceSpec without_spec = spec;
  without_spec.mass_mode = MassSchedule::Mode::absent;
  const SequenceParams with = make_hold_sequence(spec);
  const SequenceParams without = make_hold_sequence(without_spec);
  const InterferometerResult res = total_phase(with, field, species);
  const double differential = differential_protocol(with, without, field, species);

  Report r;
  r.command = "sequence";
  r.formulas = {"proper_time_difference (adaptive Simpson)", "total_phase",
                "differential_protocol"};
  r.summary = {{"t1_s", with.t1},
               {"t2_s", with.t2},
               {"t3_s", with.t3},
               {"delta_tau_source_s", res.proper_time.source_mass},
               {"delta_tau_background_s", res.proper_time.background},
               {"delta_tau_kinetic_s", res.proper_time.kinetic},
               {"delta_phi_total_rad", res.delta_phi_total},
               {"phi_g_rad", res.phi_g},
               {"phi_background_rad", res.phi_background},
               {"phi_kinetic_rad", res.phi_kinetic},
               {"population", res.population},
               {"differential_phi_g_rad", differential}};
  if (config.shake) {
    r.formulas.emplace_back("time_dilation_phase");
    r.summary.emplace_back("time_dilation_closed_form_rad",
                           time_dilation_phase(config.shaking, species));
  }
  if (!config.scan_T.empty()) {
    HoldSequenceSpec scan_spec = spec;
    scan_spec.shake_b.reset();
    const PhaseScan scan = phase_vs_T_scan(scan_spec, field, species, config.scan_T);
    r.formulas.emplace_back("phase_vs_T_scan");
    r.summary.emplace_back("scan_slope_rad_per_s", scan.slope);
    r.summary.emplace_back("scan_intercept_rad", scan.intercept);
    r.summary.emplace_back("scan_max_residual_rad", scan.max_residual);
    r.columns = {"T_s", "phi_g_rad"};
    for (std::size_t i = 0; i < scan.hold_times.size(); ++i) {
      r.rows.push_back({scan.hold_times[i], scan.phi_g[i]});
    }
  }
  return render(r, config);
}

}  // namespace gravab
