#pragma once

#include <optional>
#include <vector>

#include "lagmesh/basis.hpp"
#include "lagmesh/potentials.hpp"
#include "lagmesh/solver.hpp"

namespace lagmesh {

/// Principal: delta in (-90, 90]. ZeroTo180: delta in [0, 180).
enum class PhaseBranch { Principal, ZeroTo180 };

/// Engine: Coulomb functions at eta = Z/k. Neutral: Riccati-Bessel
/// functions, only valid for Z = 0.
enum class CoulombRoute { Engine, Neutral };

struct PhaseOptions {
  PhaseBranch branch = PhaseBranch::Principal;
  CoulombRoute route = CoulombRoute::Engine;
};

struct PhaseShiftResult {
  double energy = 0.0;  ///< problem units (internal energy times energy_scale)
  double k = 0.0;       ///< sqrt(2E), internal units
  double tan_delta = 0.0;
  double delta_deg = 0.0;
  int branch_offset = 0;  ///< delta_deg = atan(tan_delta) in degrees + 180 * branch_offset
  double gamma = 0.0;
  double sensitivity = 0.0;
};

/// tan delta_l from the Kohn integral relation
///   tan delta = -int (V - Z/r) u F / (int (V - Z/r) u G~ + I_gamma)
/// with every integral done by the mesh's own Gauss rule.
PhaseShiftResult tan_delta(const Pseudostate& state, const MeshSpec& mesh, int l, const PotentialSpec& v, double z,
                           double gamma, const PhaseOptions& options = {});

/// Applies a branch to an angle in degrees; returns (delta, offset).
std::pair<double, int> apply_branch(double tan_delta, PhaseBranch branch);

struct GammaScanRow {
  double gamma;
  double delta_deg;  ///< unwrapped along the grid; NaN where the phase was indeterminate
  double tan_delta;
};

struct GammaScan {
  PhaseShiftResult recommended;
  std::vector<GammaScanRow> rows;
  bool plateau = false;
  double plateau_gamma = 0.0;  ///< best grid gamma even when no plateau was accepted
  double min_slope = 0.0;      ///< |d delta / d ln gamma| on the flattest segment
  double median_slope = 0.0;
};

/// 16 log-spaced points over [0.1, 10].
std::vector<double> default_gamma_grid(double lo = 0.1, double hi = 10.0, int count = 16);

/// Scans gamma over `grid` (at least 8 increasing points). The plateau is the
/// grid segment with the smallest |delta step| per unit ln(gamma); its lower
/// end is the recommended gamma. If that slope is not below a third of the
/// median slope, no plateau is reported and `fallback_gamma` is used when
/// given.
GammaScan gamma_scan(const Pseudostate& state, const MeshSpec& mesh, int l, const PotentialSpec& v, double z,
                     const std::vector<double>& grid, std::optional<double> fallback_gamma = std::nullopt,
                     const PhaseOptions& options = {});

/// Analytic s-wave Eckart phase shift atan[sqrt(2E)(b - c)/(2E + bc)] in
/// degrees, principal branch.
double eckart_reference_delta0(double energy, double b, double c);

}  // namespace lagmesh
