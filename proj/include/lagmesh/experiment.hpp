#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lagmesh/matelem.hpp"
#include "lagmesh/potentials.hpp"
#include "lagmesh/scattering.hpp"

namespace lagmesh {

enum class RunMode { Bound, Scatter, GammaScan, Reproduce };
enum class OutputFormat { Csv, Json };

const char* to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

struct ExperimentConfig {
  RunMode mode = RunMode::Bound;
  int n = 20;
  std::optional<double> alpha;  ///< defaults to the variant's alpha
  double h = 1.0;
  std::string variant = "var";
  int angular = 0;  ///< l in 3D, m in 2D
  int dim = 3;
  std::string potential = "harmonic";  ///< builtin name, or a label when potential_spec is set
  std::optional<PotentialSpec> potential_spec;
  int table = 0;
  std::optional<double> gamma;
  std::vector<double> gamma_grid;  ///< empty: default grid
  int state = 1;                   ///< 1-based pseudostate for gamma-scan
  int states = 5;                  ///< rows reported by bound/scatter
  PhaseBranch branch = PhaseBranch::Principal;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
  bool check = false;

  /// Throws InvalidArgument naming the offending field.
  void validate() const;
  MeshSpec mesh() const;
  PotentialSpec resolved_potential() const;
};

nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PotentialSpec& spec);
PotentialSpec potential_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QuadratureRule& rule);
nlohmann::json to_json(const OperatorMatrix& m);

/// One acceptance comparison.
struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<Check> checks;
  std::string config_hash;
  std::string build_id;

  bool all_checks_pass() const;
};

std::string render_csv(const Report& report);
std::string render_json(const Report& report);
std::string render(const Report& report, OutputFormat format);

/// FNV-1a 64 of the canonical config JSON, hex.
std::string config_hash(const ExperimentConfig& config);
const char* build_id();

/// Analytic energy of state n (0-based) for the builtin harmonic and Coulomb
/// potentials, in 3D or 2D.
std::optional<double> analytic_energy(const PotentialSpec& v, int dim, int angular, int n);

Report run(const ExperimentConfig& config);

enum class SweepParameter { H, N, Gamma };
SweepParameter sweep_parameter_from_string(const std::string& name);

Report sweep(const ExperimentConfig& config, SweepParameter parameter, const std::vector<double>& values);

/// Compact a[-b] notation (a x 10^-b) with two significant digits.
std::string bracket_notation(double x);

/// Lowest-state relative error of the 3D harmonic (table 1: N=20, h=0.09) or
/// Coulomb (table 2: N=10, h=0.9) benchmark.
double benchmark_error_3d(int table, int l, HamiltonianVariant variant);

/// 2D m=1 benchmark: harmonic (N=20, h=0.09) or Coulomb (N=10, h=0.9).
double benchmark_error_2d(bool coulomb_potential, Variant2D variant);

/// One phase-shift benchmark entry.
struct PhaseEntry {
  HamiltonianVariant variant;
  int l;
  int state;  ///< 1-based pseudostate index
  double energy;  ///< problem units
  PhaseShiftResult phase;
  bool plateau;
  double reference_deg;  ///< analytic or tabulated reference
};

/// Eckart b=2, c=-1, N=15, h=0.1: pseudostates 1, 5, 10 on both regularized
/// meshes, gamma from a plateau scan (fallback 4).
std::vector<PhaseEntry> eckart_benchmark();

/// alpha+alpha, N=15, h=0.23, l in {0, 2}, first two pseudostates on both
/// regularized meshes. The second state's plateau gamma is the fallback for
/// the first.
std::vector<PhaseEntry> alpha_alpha_benchmark();

/// Rows of benchmark tables 1-5.
Report reproduce_table(int table);

}  // namespace lagmesh
