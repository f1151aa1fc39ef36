#include "lagmesh/experiment.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <sstream>

#include "lagmesh/acceptance.hpp"
#include "lagmesh/error.hpp"
#include "lagmesh/solver.hpp"

#ifndef LAGMESH_BUILD_ID
#define LAGMESH_BUILD_ID "unknown"
#endif

namespace lagmesh {

using nlohmann::json;

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Bound: return "bound";
    case RunMode::Scatter: return "scatter";
    case RunMode::GammaScan: return "gamma-scan";
    case RunMode::Reproduce: return "reproduce";
  }
  return "?";
}

RunMode run_mode_from_string(const std::string& name) {
  if (name == "bound") return RunMode::Bound;
  if (name == "scatter") return RunMode::Scatter;
  if (name == "gamma-scan") return RunMode::GammaScan;
  if (name == "reproduce") return RunMode::Reproduce;
  throw_error(ErrorKind::InvalidArgument, "mode: unknown value '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (mode == RunMode::Reproduce) {
    require(table >= 1 && table <= 5, "table: must be in 1..5, got " + std::to_string(table));
    return;
  }
  require(n >= 1, "N: must be >= 1, got " + std::to_string(n));
  require(h > 0.0 && std::isfinite(h), "h: must be > 0");
  require(dim == 2 || dim == 3, "dim: must be 2 or 3, got " + std::to_string(dim));
  require(angular >= 0, dim == 3 ? "l: must be >= 0" : "m: must be >= 0");
  require(angular < n, std::string(dim == 3 ? "l" : "m") + ": must be < N");
  require(!alpha || (*alpha >= 0.0 && std::isfinite(*alpha)), "alpha: must be >= 0");
  if (dim == 3) {
    variant_from_string(variant);
  } else {
    variant2d_from_string(variant);
    require(!alpha || *alpha == 0.0, "alpha: 2D runs use the alpha = 0 mesh");
    require(mode == RunMode::Bound, "dim: 2D runs support bound mode only");
  }
  require(states >= 1, "states: must be >= 1");
  require(state >= 1, "state: must be >= 1");
  require(!gamma || *gamma > 0.0, "gamma: must be > 0");
  for (double g : gamma_grid) require(g > 0.0, "gamma grid: values must be > 0");
  require(gamma_grid.empty() || gamma_grid.size() >= 8, "gamma grid: needs at least 8 points");
  resolved_potential();
}

MeshSpec ExperimentConfig::mesh() const {
  MeshSpec spec = dim == 3 ? default_mesh(variant_from_string(variant), n, h)
                           : default_mesh(variant2d_from_string(variant), n, h);
  if (alpha) spec.alpha = *alpha;
  return spec;
}

PotentialSpec ExperimentConfig::resolved_potential() const {
  if (potential_spec) return *potential_spec;
  return builtin(potential);
}

json to_json(const PotentialSpec& spec) {
  json j;
  j["label"] = spec.label;
  j["terms"] = json::array();
  for (const auto& t : spec.terms) j["terms"].push_back({{"c", t.c}, {"p", t.p}, {"a", t.a}, {"b", t.b}});
  if (spec.coulomb_erf) j["coulombErf"] = {{"q", spec.coulomb_erf->q}, {"mu", spec.coulomb_erf->mu}};
  if (spec.eckart) j["eckart"] = {{"b", spec.eckart->b}, {"c", spec.eckart->c}};
  j["tailZ"] = spec.tail_z;
  if (spec.energy_scale != 1.0) j["energyScale"] = spec.energy_scale;
  if (!spec.energy_unit.empty()) j["energyUnit"] = spec.energy_unit;
  if (spec.confining) j["confining"] = true;
  return j;
}

PotentialSpec potential_from_json(const json& j) {
  require(j.is_object(), "potential: expected a JSON object");
  PotentialSpec spec;
  try {
    spec.label = j.value("label", std::string("custom"));
    for (const auto& t : j.value("terms", json::array())) {
      spec.terms.push_back({t.value("c", 0.0), t.value("p", 0.0), t.value("a", 0.0), t.value("b", 0.0)});
    }
    if (j.contains("coulombErf")) {
      const auto& e = j.at("coulombErf");
      spec.coulomb_erf = CoulombErfTerm{e.at("q").get<double>(), e.at("mu").get<double>()};
    }
    if (j.contains("eckart")) {
      const auto& e = j.at("eckart");
      spec.eckart = EckartTerm{e.at("b").get<double>(), e.at("c").get<double>()};
      require(spec.eckart->b > 0.0 && spec.eckart->b + spec.eckart->c != 0.0, "potential.eckart: needs b > 0, b + c != 0");
    }
    spec.tail_z = j.value("tailZ", 0.0);
    spec.energy_scale = j.value("energyScale", 1.0);
    spec.energy_unit = j.value("energyUnit", std::string());
    spec.confining = j.value("confining", false);
  } catch (const json::exception& e) {
    throw_error(ErrorKind::InvalidArgument, std::string("potential: ") + e.what());
  }
  require(spec.energy_scale > 0.0, "potential.energyScale: must be > 0");
  for (const auto& t : spec.terms)
    require(t.a >= 0.0 && std::isfinite(t.c) && std::isfinite(t.p) && std::isfinite(t.b),
            "potential.terms: coefficients must be finite with a >= 0");
  return spec;
}

json to_json(const QuadratureRule& rule) {
  return {{"N", rule.order()},
          {"alpha", rule.alpha()},
          {"nodes", std::vector<double>(rule.nodes().begin(), rule.nodes().end())},
          {"weights", std::vector<double>(rule.weights().begin(), rule.weights().end())}};
}

json to_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    std::vector<double> row(m.values.cols());
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) row[j] = m.values(i, j);
    rows.push_back(row);
  }
  return {{"operator", m.tag.describe()},
          {"mode", to_string(m.mode)},
          {"mesh",
           {{"N", m.mesh.n}, {"alpha", m.mesh.alpha}, {"family", to_string(m.mesh.family)}, {"h", m.mesh.h}}},
          {"values", rows}};
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["mode"] = to_string(c.mode);
  if (c.mode == RunMode::Reproduce) {
    j["table"] = c.table;
    return j;
  }
  j["N"] = c.n;
  if (c.alpha) j["alpha"] = *c.alpha;
  j["h"] = c.h;
  j["variant"] = c.variant;
  j["dim"] = c.dim;
  j[c.dim == 3 ? "l" : "m"] = c.angular;
  j["potential"] = c.potential_spec ? to_json(*c.potential_spec) : json(c.potential);
  if (c.gamma) j["gamma"] = *c.gamma;
  if (!c.gamma_grid.empty()) j["gammaGrid"] = c.gamma_grid;
  j["state"] = c.state;
  j["states"] = c.states;
  j["branch"] = c.branch == PhaseBranch::Principal ? "principal" : "0-180";
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  require(j.is_object(), "config: expected a JSON object");
  ExperimentConfig c;
  try {
    if (j.contains("mode")) c.mode = run_mode_from_string(j.at("mode").get<std::string>());
    c.n = j.value("N", c.n);
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    c.h = j.value("h", c.h);
    c.variant = j.value("variant", c.variant);
    c.dim = j.value("dim", c.dim);
    c.angular = j.value("l", j.value("m", c.angular));
    if (j.contains("potential")) {
      const auto& p = j.at("potential");
      if (p.is_string()) {
        c.potential = p.get<std::string>();
      } else {
        c.potential_spec = potential_from_json(p);
        c.potential = c.potential_spec->label;
      }
    }
    c.table = j.value("table", c.table);
    if (j.contains("gamma")) c.gamma = j.at("gamma").get<double>();
    if (j.contains("gammaGrid")) c.gamma_grid = j.at("gammaGrid").get<std::vector<double>>();
    c.state = j.value("state", c.state);
    c.states = j.value("states", c.states);
    if (j.contains("branch")) {
      const auto b = j.at("branch").get<std::string>();
      require(b == "principal" || b == "0-180", "branch: expected 'principal' or '0-180'");
      c.branch = b == "principal" ? PhaseBranch::Principal : PhaseBranch::ZeroTo180;
    }
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      require(f == "csv" || f == "json", "format: expected 'csv' or 'json'");
      c.format = f == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    }
    c.out = j.value("out", c.out);
    c.check = j.value("check", c.check);
  } catch (const json::exception& e) {
    throw_error(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
  }
  return c;
}

bool Report::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt::format("{:.6g}", v.get<double>());
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

json round_numbers(const json& v) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) return nullptr;
    return std::stod(fmt::format("{:.15g}", x));
  }
  if (v.is_array() || v.is_object()) {
    json out = v;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it);
    return out;
  }
  return v;
}

}  // namespace

std::string render_csv(const Report& report) {
  std::ostringstream os;
  os << "# " << report.title << "\n";
  for (auto it = report.summary.begin(); it != report.summary.end(); ++it)
    os << "# " << it.key() << "=" << csv_cell(it.value()) << "\n";
  for (const auto& c : report.checks) os << "# check " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i) os << (i ? "," : "") << report.columns[i];
  os << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Report& report) {
  json j;
  j["schema"] = 1;
  j["title"] = report.title;
  j["columns"] = report.columns;
  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) r[report.columns[i]] = row[i];
    j["rows"].push_back(r);
  }
  j["summary"] = report.summary;
  j["checks"] = json::array();
  for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["provenance"] = {{"configHash", report.config_hash}, {"buildId", report.build_id}};
  return round_numbers(j).dump(2) + "\n";
}

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::Csv ? render_csv(report) : render_json(report);
}

std::string config_hash(const ExperimentConfig& config) {
  const std::string text = to_json(config).dump();
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  return fmt::format("{:016x}", hash);
}

const char* build_id() { return LAGMESH_BUILD_ID; }

std::optional<double> analytic_energy(const PotentialSpec& v, int dim, int angular, int n) {
  if (v.coulomb_erf || v.eckart || v.terms.size() != 1) return std::nullopt;
  const auto& t = v.terms[0];
  if (t.a != 0.0 || t.b != 0.0) return std::nullopt;
  const double lead = dim == 3 ? angular + 1.0 : angular + 0.5;
  if (v.label == "harmonic" && t.p == 2.0 && t.c == 0.5) return 2.0 * n + lead + 0.5;
  if (v.label == "coulomb" && t.p == -1.0 && t.c < 0.0) {
    const double nn = n + lead;
    return -t.c * t.c / (2.0 * nn * nn);
  }
  return std::nullopt;
}

namespace {

Report start_report(const ExperimentConfig& config, std::string title) {
  Report r;
  r.title = std::move(title);
  r.config_hash = config_hash(config);
  r.build_id = build_id();
  return r;
}

BoundSpectrum solve_config(const ExperimentConfig& config, const PotentialSpec& v) {
  const MeshSpec spec = config.mesh();
  if (config.dim == 3) return solve_bound_states(hamiltonian_3d(spec, config.angular, v, variant_from_string(config.variant)));
  return solve_bound_states(hamiltonian_2d(spec, config.angular, v, variant2d_from_string(config.variant)));
}

std::string describe(const ExperimentConfig& c, const PotentialSpec& v) {
  return fmt::format("{} {} dim={} {}={} N={} alpha={} h={} potential={}", to_string(c.mode), c.variant, c.dim,
                     c.dim == 3 ? "l" : "m", c.angular, c.n, c.mesh().alpha, c.h, v.label);
}

Report run_bound(const ExperimentConfig& c) {
  const PotentialSpec v = c.resolved_potential();
  Report r = start_report(c, describe(c, v));
  r.columns = {"state", "energy", "exact", "rel_error"};
  const BoundSpectrum sp = solve_config(c, v);
  const int count = std::min<int>(c.states, static_cast<int>(sp.energies.size()));
  for (int i = 0; i < count; ++i) {
    const double e = sp.energies(i) * v.energy_scale;
    const auto exact = analytic_energy(v, c.dim, c.angular, i);
    json ex = exact ? json(*exact * v.energy_scale) : json(nullptr);
    json err = exact ? json(relative_error(e, *exact * v.energy_scale)) : json(nullptr);
    r.rows.push_back({i + 1, e, ex, err});
  }
  if (!v.energy_unit.empty()) r.summary["energyUnit"] = v.energy_unit;
  return r;
}

std::vector<double> grid_of(const ExperimentConfig& c) {
  return c.gamma_grid.empty() ? default_gamma_grid() : c.gamma_grid;
}

std::vector<Pseudostate> pseudostates_of(const ExperimentConfig& c, const PotentialSpec& v) {
  require(c.dim == 3, "dim: scattering runs need dim = 3");
  require(satisfies_tail_condition(v, c.h), "potential: tail does not approach tailZ / r");
  return pseudostates(solve_config(c, v));
}

Report run_scatter(const ExperimentConfig& c) {
  const PotentialSpec v = c.resolved_potential();
  Report r = start_report(c, describe(c, v));
  r.columns = {"state", "energy", "k", "tan_delta", "delta_deg", "gamma", "sensitivity", "plateau", "reference_deg"};
  const auto ps = pseudostates_of(c, v);
  PhaseOptions opt;
  opt.branch = c.branch;
  const int count = std::min<int>(c.states, static_cast<int>(ps.size()));
  for (int i = 0; i < count; ++i) {
    PhaseShiftResult res;
    json plateau = nullptr;
    if (c.gamma) {
      res = tan_delta(ps[i], c.mesh(), c.angular, v, v.tail_z, *c.gamma, opt);
    } else {
      const GammaScan scan = gamma_scan(ps[i], c.mesh(), c.angular, v, v.tail_z, grid_of(c), std::nullopt, opt);
      res = scan.recommended;
      plateau = scan.plateau;
    }
    json ref = nullptr;
    if (v.eckart && c.angular == 0 && v.terms.empty() && !v.coulomb_erf)
      ref = eckart_reference_delta0(ps[i].energy, v.eckart->b, v.eckart->c);
    r.rows.push_back({i + 1, res.energy, res.k, res.tan_delta, res.delta_deg, res.gamma, res.sensitivity, plateau, ref});
  }
  if (!v.energy_unit.empty()) r.summary["energyUnit"] = v.energy_unit;
  return r;
}

Report run_gamma_scan(const ExperimentConfig& c) {
  const PotentialSpec v = c.resolved_potential();
  Report r = start_report(c, describe(c, v));
  r.columns = {"gamma", "delta_deg", "tan_delta"};
  const auto ps = pseudostates_of(c, v);
  require(c.state <= static_cast<int>(ps.size()), "state: only " + std::to_string(ps.size()) + " pseudostates");
  PhaseOptions opt;
  opt.branch = c.branch;
  const GammaScan scan =
      gamma_scan(ps[c.state - 1], c.mesh(), c.angular, v, v.tail_z, grid_of(c), c.gamma, opt);
  for (const auto& row : scan.rows) r.rows.push_back({row.gamma, row.delta_deg, row.tan_delta});
  r.summary["state"] = c.state;
  r.summary["energy"] = scan.recommended.energy;
  r.summary["plateau"] = scan.plateau;
  r.summary["plateauGamma"] = scan.plateau_gamma;
  r.summary["gamma"] = scan.recommended.gamma;
  r.summary["deltaDeg"] = scan.recommended.delta_deg;
  r.summary["sensitivity"] = scan.recommended.sensitivity;
  r.summary["minSlope"] = scan.min_slope;
  r.summary["medianSlope"] = scan.median_slope;
  return r;
}

}  // namespace

Report run(const ExperimentConfig& config) {
  config.validate();
  switch (config.mode) {
    case RunMode::Bound: return run_bound(config);
    case RunMode::Scatter: return run_scatter(config);
    case RunMode::GammaScan: return run_gamma_scan(config);
    case RunMode::Reproduce: {
      Report r = reproduce_table(config.table);
      r.config_hash = config_hash(config);
      if (config.check) {
        for (int id : acceptance::criteria_for_table(config.table)) {
          const auto res = acceptance::evaluate(id);
          for (const auto& ch : res.checks) r.checks.push_back(ch);
        }
      }
      return r;
    }
  }
  return {};
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
  if (name == "h") return SweepParameter::H;
  if (name == "N") return SweepParameter::N;
  if (name == "gamma") return SweepParameter::Gamma;
  throw_error(ErrorKind::InvalidArgument, "sweep parameter: expected h, N or gamma, got '" + name + "'");
}

Report sweep(const ExperimentConfig& config, SweepParameter parameter, const std::vector<double>& values) {
  require(!values.empty(), "sweep: value list is empty");
  require(config.mode != RunMode::Reproduce, "sweep: not available for reproduce mode");
  const PotentialSpec v = config.resolved_potential();
  Report r = start_report(config, "sweep of " + describe(config, v));

  if (parameter == SweepParameter::Gamma) {
    require(config.mode != RunMode::Bound, "sweep: gamma needs scatter or gamma-scan mode");
    config.validate();
    const auto ps = pseudostates_of(config, v);
    require(config.state <= static_cast<int>(ps.size()), "state: not enough pseudostates");
    PhaseOptions opt;
    opt.branch = config.branch;
    r.columns = {"gamma", "energy", "tan_delta", "delta_deg"};
    for (double g : values) {
      require(g > 0.0, "sweep: gamma values must be > 0");
      const auto res = tan_delta(ps[config.state - 1], config.mesh(), config.angular, v, v.tail_z, g, opt);
      r.rows.push_back({g, res.energy, res.tan_delta, res.delta_deg});
    }
    return r;
  }

  const bool scatter = config.mode != RunMode::Bound;
  r.columns = scatter ? std::vector<std::string>{parameter == SweepParameter::H ? "h" : "N", "energy", "delta_deg", "gamma"}
                      : std::vector<std::string>{parameter == SweepParameter::H ? "h" : "N", "energy", "exact", "rel_error"};
  for (double value : values) {
    ExperimentConfig c = config;
    if (parameter == SweepParameter::H) {
      c.h = value;
    } else {
      require(value == std::round(value), "sweep: N values must be integers");
      c.n = static_cast<int>(value);
    }
    c.validate();
    json key = parameter == SweepParameter::H ? json(value) : json(c.n);
    if (scatter) {
      const auto ps = pseudostates_of(c, v);
      require(!ps.empty(), "sweep: no pseudostates");
      PhaseOptions opt;
      opt.branch = c.branch;
      const PhaseShiftResult res =
          c.gamma ? tan_delta(ps[0], c.mesh(), c.angular, v, v.tail_z, *c.gamma, opt)
                  : gamma_scan(ps[0], c.mesh(), c.angular, v, v.tail_z, grid_of(c), std::nullopt, opt).recommended;
      r.rows.push_back({key, res.energy, res.delta_deg, res.gamma});
    } else {
      const BoundSpectrum sp = solve_config(c, v);
      const double e = sp.energies(0) * v.energy_scale;
      const auto exact = analytic_energy(v, c.dim, c.angular, 0);
      r.rows.push_back({key, e, exact ? json(*exact * v.energy_scale) : json(nullptr),
                        exact ? json(relative_error(e, *exact * v.energy_scale)) : json(nullptr)});
    }
  }
  return r;
}

std::string bracket_notation(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return fmt::format("{}", x);
  const std::string s = fmt::format("{:.1e}", x);
  const auto e = s.find('e');
  const int exponent = std::stoi(s.substr(e + 1));
  if (exponent == 0) return s.substr(0, e);
  return s.substr(0, e) + "[" + std::to_string(exponent) + "]";
}

double benchmark_error_3d(int table, int l, HamiltonianVariant variant) {
  require(table == 1 || table == 2, "benchmark table must be 1 or 2");
  const bool ho = table == 1;
  const PotentialSpec v = ho ? harmonic() : coulomb();
  const MeshSpec spec = default_mesh(variant, ho ? 20 : 10, ho ? 0.09 : 0.9);
  const BoundSpectrum sp = solve_bound_states(hamiltonian_3d(spec, l, v, variant));
  return relative_error(sp.energies(0), *analytic_energy(v, 3, l, 0));
}

double benchmark_error_2d(bool coulomb_potential, Variant2D variant) {
  const PotentialSpec v = coulomb_potential ? coulomb() : harmonic();
  const MeshSpec spec = default_mesh(variant, coulomb_potential ? 10 : 20, coulomb_potential ? 0.9 : 0.09);
  const BoundSpectrum sp = solve_bound_states(hamiltonian_2d(spec, 1, v, variant));
  return relative_error(sp.energies(0), *analytic_energy(v, 2, 1, 0));
}

std::vector<PhaseEntry> eckart_benchmark() {
  const PotentialSpec v = eckart(2.0, -1.0);
  const auto grid = default_gamma_grid();
  std::vector<PhaseEntry> out;
  for (auto variant : {HamiltonianVariant::RegSqrtMesh, HamiltonianVariant::RegRMesh}) {
    const MeshSpec spec = default_mesh(variant, 15, 0.1);
    const auto ps = pseudostates(solve_bound_states(hamiltonian_3d(spec, 0, v, variant)));
    require(ps.size() >= 10, "Eckart benchmark needs 10 pseudostates");
    for (int n : {1, 5, 10}) {
      const GammaScan scan = gamma_scan(ps[n - 1], spec, 0, v, 0.0, grid, 4.0);
      out.push_back({variant, 0, n, ps[n - 1].energy, scan.recommended, scan.plateau,
                     eckart_reference_delta0(ps[n - 1].energy, 2.0, -1.0)});
    }
  }
  return out;
}

std::vector<PhaseEntry> alpha_alpha_benchmark() {
  // R-matrix reference values, degrees: (l, mesh) -> first two pseudostates
  const double reference[2][2][2] = {{{179.96, 116.63}, {179.96, 112.65}}, {{12.470, 94.464}, {15.120, 99.600}}};
  const PotentialSpec v = buck_alpha_alpha();
  const auto grid = default_gamma_grid();
  PhaseOptions opt;
  opt.branch = PhaseBranch::ZeroTo180;
  std::vector<PhaseEntry> out;
  for (int li = 0; li < 2; ++li) {
    const int l = li == 0 ? 0 : 2;
    for (int vi = 0; vi < 2; ++vi) {
      const auto variant = vi == 0 ? HamiltonianVariant::RegSqrtMesh : HamiltonianVariant::RegRMesh;
      const MeshSpec spec = default_mesh(variant, 15, 0.23);
      const auto ps = pseudostates(solve_bound_states(hamiltonian_3d(spec, l, v, variant)));
      require(ps.size() >= 2, "alpha+alpha benchmark needs 2 pseudostates");
      const GammaScan second = gamma_scan(ps[1], spec, l, v, v.tail_z, grid, std::nullopt, opt);
      const GammaScan first = gamma_scan(ps[0], spec, l, v, v.tail_z, grid, second.recommended.gamma, opt);
      out.push_back({variant, l, 1, first.recommended.energy, first.recommended, first.plateau, reference[li][vi][0]});
      out.push_back({variant, l, 2, second.recommended.energy, second.recommended, second.plateau, reference[li][vi][1]});
    }
  }
  return out;
}

Report reproduce_table(int table) {
  require(table >= 1 && table <= 5, "table: must be in 1..5, got " + std::to_string(table));
  ExperimentConfig c;
  c.mode = RunMode::Reproduce;
  c.table = table;
  Report r = start_report(c, "");
  const HamiltonianVariant variants[] = {HamiltonianVariant::Var, HamiltonianVariant::RegSqrtMesh,
                                         HamiltonianVariant::RegRMesh, HamiltonianVariant::NonReg,
                                         HamiltonianVariant::NonRegVG};
  if (table == 1 || table == 2) {
    r.title = table == 1 ? "relative error, harmonic oscillator, N=20, h=0.09"
                         : "relative error, Coulomb, N=10, h=0.9";
    r.columns = {"l", "var", "reg-sqrt", "reg-r", "non-reg", "non-reg-vg"};
    for (int l = 0; l <= 2; ++l) {
      std::vector<json> row{l};
      for (auto v : variants) row.push_back(bracket_notation(benchmark_error_3d(table, l, v)));
      r.rows.push_back(row);
    }
  } else if (table == 3) {
    r.title = "Eckart b=2 c=-1 s-wave phase shifts (degrees), N=15, h=0.1";
    r.columns = {"mesh", "state", "energy", "delta_deg", "exact_deg", "gamma", "plateau", "sensitivity"};
    for (const auto& e : eckart_benchmark())
      r.rows.push_back({to_string(e.variant), e.state, e.energy, e.phase.delta_deg, e.reference_deg, e.phase.gamma,
                        e.plateau, e.phase.sensitivity});
  } else if (table == 4) {
    r.title = "alpha+alpha phase shifts (degrees), N=15, h=0.23, energies in MeV";
    r.columns = {"l", "mesh", "state", "energy", "delta_deg", "reference_deg", "gamma", "plateau", "sensitivity"};
    for (const auto& e : alpha_alpha_benchmark())
      r.rows.push_back({e.l, to_string(e.variant), e.state, e.energy, e.phase.delta_deg, e.reference_deg,
                        e.phase.gamma, e.plateau, e.phase.sensitivity});
  } else {
    r.title = "2D m=1 relative error: harmonic N=20 h=0.09, Coulomb N=10 h=0.9";
    r.columns = {"potential", "var", "reg-sqrt"};
    for (bool coul : {false, true})
      r.rows.push_back({coul ? "-1/rho" : "rho^2/2", bracket_notation(benchmark_error_2d(coul, Variant2D::Var2D)),
                        bracket_notation(benchmark_error_2d(coul, Variant2D::RegSqrtMesh2D))});
  }
  return r;
}

}  // namespace lagmesh
