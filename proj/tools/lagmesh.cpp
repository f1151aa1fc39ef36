// lagmesh: bound states and phase shifts on Lagrange-Laguerre meshes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lagmesh/experiment.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNumerical = 2, kMismatch = 3 };

struct Flags {
  std::string config;
  std::string potential;
  std::optional<int> l, m, dim, n, table, state, states;
  std::optional<double> alpha, h, gamma;
  std::string variant;
  std::vector<double> gamma_grid;
  std::string format;
  std::string out;
  std::string branch;
  bool check = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; other flags override it");
  cmd->add_option("--potential", f.potential, "harmonic | coulomb[:Z] | eckart[:b,c] | alpha-alpha | file.json");
  cmd->add_option("--l", f.l, "orbital angular momentum (3D)");
  cmd->add_option("--m", f.m, "angular momentum (2D)");
  cmd->add_option("--dim", f.dim, "2 or 3");
  cmd->add_option("--variant", f.variant, "var | reg-sqrt | reg-r | non-reg | non-reg-vg (2D: var | reg-sqrt)");
  cmd->add_option("--N", f.n, "number of mesh points");
  cmd->add_option("--alpha", f.alpha, "Laguerre alpha (default per variant)");
  cmd->add_option("--h", f.h, "scaling factor");
  cmd->add_option("--gamma", f.gamma, "regularization parameter gamma (skips the plateau search)");
  cmd->add_option("--gamma-grid", f.gamma_grid, "explicit gamma grid (at least 8 values)")->delimiter(',');
  cmd->add_option("--state", f.state, "1-based pseudostate for gamma-scan");
  cmd->add_option("--states", f.states, "number of states to report");
  cmd->add_option("--branch", f.branch, "phase branch: principal | 0-180");
  cmd->add_option("--format", f.format, "csv | json");
  cmd->add_option("--out", f.out, "output file (default stdout)");
}

lagmesh::PotentialSpec load_potential_file(const std::string& path) {
  std::ifstream in(path);
  lagmesh::require(static_cast<bool>(in), "potential: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw lagmesh::Error(lagmesh::ErrorKind::InvalidArgument, "potential: " + std::string(e.what()));
  }
  return lagmesh::potential_from_json(j);
}

lagmesh::ExperimentConfig build_config(const Flags& f, lagmesh::RunMode mode) {
  lagmesh::ExperimentConfig c;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    lagmesh::require(static_cast<bool>(in), "config: cannot open '" + f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw lagmesh::Error(lagmesh::ErrorKind::InvalidArgument, "config: " + std::string(e.what()));
    }
    c = lagmesh::config_from_json(j);
  }
  c.mode = mode;
  if (!f.potential.empty()) {
    const bool is_file = f.potential.size() > 5 && f.potential.substr(f.potential.size() - 5) == ".json";
    if (is_file) {
      c.potential_spec = load_potential_file(f.potential);
      c.potential = c.potential_spec->label;
    } else {
      c.potential_spec.reset();
      c.potential = f.potential;
    }
  }
  if (f.dim) c.dim = *f.dim;
  lagmesh::require(!(f.l && f.m), "l, m: give one of --l (3D) or --m (2D)");
  if (f.m && !f.dim) c.dim = 2;
  if (f.l) c.angular = *f.l;
  if (f.m) c.angular = *f.m;
  if (!f.variant.empty()) c.variant = f.variant;
  if (f.n) c.n = *f.n;
  if (f.alpha) c.alpha = *f.alpha;
  if (f.h) c.h = *f.h;
  if (f.gamma) c.gamma = *f.gamma;
  if (!f.gamma_grid.empty()) c.gamma_grid = f.gamma_grid;
  if (f.state) c.state = *f.state;
  if (f.states) c.states = *f.states;
  if (f.table) c.table = *f.table;
  if (!f.branch.empty()) {
    lagmesh::require(f.branch == "principal" || f.branch == "0-180", "branch: expected 'principal' or '0-180'");
    c.branch = f.branch == "principal" ? lagmesh::PhaseBranch::Principal : lagmesh::PhaseBranch::ZeroTo180;
  }
  if (!f.format.empty()) {
    lagmesh::require(f.format == "csv" || f.format == "json", "format: expected 'csv' or 'json'");
    c.format = f.format == "csv" ? lagmesh::OutputFormat::Csv : lagmesh::OutputFormat::Json;
  }
  if (!f.out.empty()) c.out = f.out;
  c.check = c.check || f.check;
  return c;
}

void emit(const lagmesh::Report& report, const lagmesh::ExperimentConfig& c) {
  const std::string text = lagmesh::render(report, c.format);
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out);
  lagmesh::require(static_cast<bool>(out), "out: cannot write '" + c.out + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrange-mesh bound states and phase shifts"};
  // --h is the scaling factor, so help is long-form only
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Flags flags;

  auto* bound = app.add_subcommand("bound", "bound-state spectrum");
  auto* scatter = app.add_subcommand("scatter", "phase shifts of the pseudostates");
  auto* gscan = app.add_subcommand("gamma-scan", "phase shift of one pseudostate over a gamma grid");
  auto* sweep = app.add_subcommand("sweep", "repeat a run over values of h, N or gamma");
  auto* reproduce = app.add_subcommand("reproduce", "benchmark tables 1-5");
  for (auto* cmd : {bound, scatter, gscan, sweep}) add_common(cmd, flags);

  std::string sweep_param;
  std::vector<double> sweep_values;
  std::string sweep_of = "bound";
  sweep->add_option("--param", sweep_param, "h | N | gamma")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required()->delimiter(',');
  sweep->add_option("--of", sweep_of, "bound | scatter");

  reproduce->add_option("--table", flags.table, "table number 1-5")->required();
  reproduce->add_flag("--check", flags.check, "compare against the acceptance criteria; exit 3 on mismatch");
  reproduce->add_option("--format", flags.format, "csv | json");
  reproduce->add_option("--out", flags.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    lagmesh::Report report;
    lagmesh::ExperimentConfig config;
    if (*bound) {
      config = build_config(flags, lagmesh::RunMode::Bound);
      report = lagmesh::run(config);
    } else if (*scatter) {
      config = build_config(flags, lagmesh::RunMode::Scatter);
      report = lagmesh::run(config);
    } else if (*gscan) {
      config = build_config(flags, lagmesh::RunMode::GammaScan);
      report = lagmesh::run(config);
    } else if (*sweep) {
      lagmesh::require(sweep_of == "bound" || sweep_of == "scatter", "of: expected 'bound' or 'scatter'");
      config = build_config(flags, sweep_of == "bound" ? lagmesh::RunMode::Bound : lagmesh::RunMode::Scatter);
      report = lagmesh::sweep(config, lagmesh::sweep_parameter_from_string(sweep_param), sweep_values);
    } else {
      config = build_config(flags, lagmesh::RunMode::Reproduce);
      report = lagmesh::run(config);
    }
    emit(report, config);
    if (config.mode == lagmesh::RunMode::Reproduce && config.check && !report.all_checks_pass()) {
      std::cerr << "acceptance mismatch:\n";
      for (const auto& c : report.checks)
        if (!c.pass) std::cerr << "  " << c.name << ": " << c.detail << "\n";
      return kMismatch;
    }
    return kOk;
  } catch (const lagmesh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? kValidation : kNumerical;
  }
}
