#include "lagmesh/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <numbers>

#include "lagmesh/error.hpp"
#include "lagmesh/specfun.hpp"

namespace lagmesh {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

CoulombPair waves(int l, double eta, double x, CoulombRoute route) {
  return route == CoulombRoute::Neutral ? riccati_bessel(l, x) : coulomb_wave(l, eta, x);
}

}  // namespace

std::pair<double, int> apply_branch(double tan_delta, PhaseBranch branch) {
  double d = std::atan(tan_delta) * kDeg;
  int offset = 0;
  if (branch == PhaseBranch::Principal) {
    if (d <= -90.0) {
      d += 180.0;
      offset = 1;
    }
  } else if (d < 0.0) {
    d += 180.0;
    offset = 1;
  }
  return {d, offset};
}

PhaseShiftResult tan_delta(const Pseudostate& state, const MeshSpec& spec, int l, const PotentialSpec& v, double z,
                           double gamma, const PhaseOptions& options) {
  require(state.energy > 0.0, "phase shifts need a positive-energy state");
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be > 0");
  require(l >= 0, "l must be >= 0");
  require(state.coefficients.size() == spec.n, "pseudostate does not match the mesh size");
  require(options.route == CoulombRoute::Engine || z == 0.0, "the neutral route needs Z = 0");
  const LagrangeMesh mesh(spec);
  const double h = spec.h;
  const double k = std::sqrt(2.0 * state.energy);
  const double eta = z / k;

  double num = 0.0, den = 0.0, igamma = 0.0, scale = 0.0;
  for (int i = 0; i < spec.n; ++i) {
    const double r = h * mesh.node(i);
    // weight times u(r_i): sqrt(h lambda_i) c_i
    const double wu = std::sqrt(h * mesh.weight(i)) * state.coefficients(i);
    if (wu == 0.0) continue;
    const CoulombPair cw = waves(l, eta, k * r, options.route);
    const double dv = evaluate(v, r) - z / r;
    const double e = std::exp(-gamma * r);
    const double om = -std::expm1(-gamma * r);
    const double gt = cw.G * std::pow(om, l + 1);
    const double dg = k * cw.Gprime;
    const double lead = l == 0 ? gamma * cw.G : std::pow(om, l - 1) * gamma * (1.0 - (l + 1) * e) * cw.G;
    const double ig = 0.5 * wu * (l + 1) * gamma * e * (lead - 2.0 * std::pow(om, l) * dg);
    num += wu * dv * cw.F;
    den += wu * dv * gt;
    igamma += ig;
    scale += std::fabs(wu * dv * cw.F) + std::fabs(wu * dv * gt) + std::fabs(ig);
  }
  const double denominator = den + igamma;
  if (!std::isfinite(num) || !std::isfinite(denominator))
    throw_error(ErrorKind::Evaluation, "phase-shift integrals are not finite");
  if (std::fabs(denominator) <= 1e-14 * std::max(scale, std::fabs(num)))
    throw_error(ErrorKind::IndeterminatePhase,
                "denominator of the integral relation vanishes at E = " + std::to_string(state.energy) +
                    ", gamma = " + std::to_string(gamma));

  PhaseShiftResult out;
  out.energy = state.energy * v.energy_scale;
  out.k = k;
  out.tan_delta = -num / denominator;
  std::tie(out.delta_deg, out.branch_offset) = apply_branch(out.tan_delta, options.branch);
  out.gamma = gamma;
  return out;
}

std::vector<double> default_gamma_grid(double lo, double hi, int count) {
  require(lo > 0.0 && hi > lo && count >= 2, "gamma grid needs 0 < lo < hi and at least 2 points");
  std::vector<double> g(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

GammaScan gamma_scan(const Pseudostate& state, const MeshSpec& mesh, int l, const PotentialSpec& v, double z,
                     const std::vector<double>& grid, std::optional<double> fallback_gamma,
                     const PhaseOptions& options) {
  require(grid.size() >= 8, "gamma scan needs at least 8 grid points, got " + std::to_string(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(grid[i] > 0.0, "gamma grid values must be > 0");
    if (i > 0) require(grid[i] > grid[i - 1], "gamma grid must be strictly increasing");
  }

  GammaScan scan;
  double previous = std::nan("");
  for (double g : grid) {
    GammaScanRow row{g, std::nan(""), std::nan("")};
    try {
      const PhaseShiftResult r = tan_delta(state, mesh, l, v, z, g, options);
      row.tan_delta = r.tan_delta;
      double d = std::atan(r.tan_delta) * kDeg;
      if (std::isfinite(previous)) d += 180.0 * std::round((previous - d) / 180.0);
      row.delta_deg = d;
      previous = d;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IndeterminatePhase) throw;
    }
    scan.rows.push_back(row);
  }

  std::vector<double> slopes;
  int best = -1;
  double best_slope = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = scan.rows[i].delta_deg;
    const double b = scan.rows[i + 1].delta_deg;
    if (!std::isfinite(a) || !std::isfinite(b)) continue;
    const double slope = std::fabs(b - a) / std::log(grid[i + 1] / grid[i]);
    slopes.push_back(slope);
    if (best < 0 || slope < best_slope) {
      best = static_cast<int>(i);
      best_slope = slope;
    }
  }
  if (best < 0) throw_error(ErrorKind::IndeterminatePhase, "phase is indeterminate across the whole gamma grid");

  std::vector<double> sorted = slopes;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  scan.median_slope = m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  scan.min_slope = best_slope;
  scan.plateau_gamma = grid[best];
  scan.plateau = 3.0 * best_slope < scan.median_slope;

  auto sensitivity_at = [&](double g0, double d0) {
    const double ratio = best + 1 < static_cast<int>(grid.size()) ? grid[best + 1] / grid[best] : grid[1] / grid[0];
    double s = 0.0;
    for (double g : {g0 / ratio, g0 * ratio}) {
      try {
        double d = std::atan(tan_delta(state, mesh, l, v, z, g, options).tan_delta) * kDeg;
        d += 180.0 * std::round((d0 - d) / 180.0);
        s = std::max(s, std::fabs(d - d0));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IndeterminatePhase) throw;
        s = std::numeric_limits<double>::infinity();
      }
    }
    return s;
  };

  if (scan.plateau || !fallback_gamma) {
    scan.recommended = tan_delta(state, mesh, l, v, z, grid[best], options);
    double s = 0.0;
    const double d0 = scan.rows[best].delta_deg;
    for (int j : {best - 1, best + 1}) {
      if (j < 0 || j >= static_cast<int>(grid.size())) continue;
      const double d = scan.rows[j].delta_deg;
      s = std::max(s, std::isfinite(d) ? std::fabs(d - d0) : std::numeric_limits<double>::infinity());
    }
    scan.recommended.sensitivity = s;
  } else {
    scan.recommended = tan_delta(state, mesh, l, v, z, *fallback_gamma, options);
    scan.recommended.sensitivity = sensitivity_at(*fallback_gamma, std::atan(scan.recommended.tan_delta) * kDeg);
  }
  return scan;
}

double eckart_reference_delta0(double energy, double b, double c) {
  require(energy > 0.0, "Eckart reference needs E > 0");
  const double k = std::sqrt(2.0 * energy);
  const double den = 2.0 * energy + b * c;
  require(den != 0.0, "Eckart reference is undefined where 2E + bc = 0");
  return std::atan(k * (b - c) / den) * kDeg;
}

}  // namespace lagmesh
