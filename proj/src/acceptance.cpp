#include "lagmesh/acceptance.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>

#include "lagmesh/error.hpp"
#include "lagmesh/solver.hpp"
#include "lagmesh/specfun.hpp"

namespace lagmesh::acceptance {

namespace {

// Pinned tolerances.
constexpr double kMomentTol = 1e-13;
constexpr double kOracleTol = 1e-11;
constexpr double kTable1Tol = 1e-10;
constexpr double kTable2Floor = 1e-13;
constexpr double kEckartTol1 = 1e-3;
constexpr double kEckartTol5 = 1e-3;
constexpr double kEckartTol10 = 0.2;
constexpr double kAlphaL2Tol = 0.02;
constexpr double kAlphaL0Tol = 0.05;
constexpr double kTable5HoTol = 1e-10;
constexpr double kTable5CoulombTol = 1e-12;
constexpr double kSymmetryTol = 1e-13;
constexpr double kKineticTol = 1e-14;
constexpr double kRescaleTol = 1e-13;
constexpr double kWronskianTol = 1e-10;
constexpr double kVariationalTol = 1e-12;
constexpr double kLossRatio = 1e3;

using Clock = std::chrono::steady_clock;

struct Collector {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

bool within_factor(double value, double target, double factor) {
  return value != 0.0 && std::fabs(value) <= factor * std::fabs(target) && std::fabs(value) >= std::fabs(target) / factor;
}

// |x - printed| within `ulps` units of the printed last place.
bool matches_printed(double x, double printed, int decimals, double ulps) {
  return std::fabs(x - printed) <= ulps * std::pow(10.0, -decimals) * (1.0 + 1e-9);
}

const char* short_name(HamiltonianVariant v) { return to_string(v); }

void criterion1(Collector& c) {
  double worst = 0.0;
  std::string where;
  for (double alpha : {0.0, 1.0, 2.0}) {
    for (int n = 1; n <= 50; ++n) {
      const QuadratureRule rule = generate_rule(n, alpha);
      for (int m = 0; m <= 2 * n - 1; ++m) {
        const double p = m + alpha;
        const double sum = integrate(rule, [&](double r) { return std::exp(p * std::log(r) - r); });
        const double exact = std::tgamma(p + 1.0);
        const double err = std::fabs(sum - exact) / exact;
        if (err > worst) {
          worst = err;
          where = fmt::format("N={} alpha={} m={}", n, alpha, m);
        }
      }
    }
  }
  c.add("moment exactness N<=50, alpha in {0,1,2}", worst <= kMomentTol,
        fmt::format("max rel error {:.2e} at {} (tol {:.0e})", worst, where, kMomentTol));
}

// Elementwise relative difference; entries that vanish in the closed form `a`
// are measured against its largest entry.
double max_rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst = 0.0;
  const double norm = a.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double scale = a(i, j) != 0.0 ? std::fabs(a(i, j)) : norm;
      const double d = std::fabs(a(i, j) - b(i, j));
      if (d == 0.0) continue;
      worst = std::max(worst, d / scale);
    }
  return worst;
}

void criterion2(Collector& c) {
  struct Op {
    const char* name;
    OracleOperator oracle;
    std::function<Eigen::MatrixXd(const LagrangeMesh&)> closed;
  };
  const std::vector<Op> ops = {
      {"1/r", OracleOperator::InvR, [](const LagrangeMesh& m) { return power_matrix(m, -1, Mode::Exact).values; }},
      {"1/r^2", OracleOperator::InvR2, [](const LagrangeMesh& m) { return power_matrix(m, -2, Mode::Exact).values; }},
      {"r", OracleOperator::R, [](const LagrangeMesh& m) { return power_matrix(m, 1, Mode::Exact).values; }},
      {"r^2", OracleOperator::R2, [](const LagrangeMesh& m) { return power_matrix(m, 2, Mode::Exact).values; }},
      {"d/dr", OracleOperator::DDr, [](const LagrangeMesh& m) { return ddr_matrix(m).values; }},
      {"d^2/dr^2", OracleOperator::D2, [](const LagrangeMesh& m) { return kinetic_matrix(m, Mode::Exact).values; }},
  };
  const int sizes[] = {2, 5, 10, 15, 20, 25, 30};
  for (const auto& op : ops) {
    double worst = 0.0;
    for (double alpha : {1.0, 2.0})
      for (int n : sizes) {
        const LagrangeMesh mesh({n, alpha, Family::RegSqrt, 1.0});
        worst = std::max(worst, max_rel_diff(op.closed(mesh), oracle_matrix(mesh, op.oracle)));
      }
    c.add(fmt::format("closed form {} vs oracle", op.name), worst <= kOracleTol,
          fmt::format("max rel diff {:.2e} (tol {:.0e})", worst, kOracleTol));
  }
  double worst = 0.0;
  for (int n : sizes) {
    const LagrangeMesh mesh({n, 0.0, Family::RegSqrt, 1.0});
    worst = std::max(worst, max_rel_diff(combined_2d_matrix(mesh).values, oracle_matrix(mesh, OracleOperator::Combined2D)));
  }
  c.add("closed form d^2/dr^2 + 1/4r^2 (alpha=0) vs oracle", worst <= kOracleTol,
        fmt::format("max rel diff {:.2e} (tol {:.0e})", worst, kOracleTol));
}

const HamiltonianVariant kVariants[] = {HamiltonianVariant::Var, HamiltonianVariant::RegSqrtMesh,
                                        HamiltonianVariant::RegRMesh, HamiltonianVariant::NonReg,
                                        HamiltonianVariant::NonRegVG};

void criterion3(Collector& c) {
  for (int l = 0; l <= 2; ++l) {
    for (auto v : kVariants) {
      const double e = benchmark_error_3d(1, l, v);
      if (v == HamiltonianVariant::NonReg && l == 1) {
        c.add(fmt::format("HO l=1 {}", short_name(v)), within_factor(e, 2.8e-7, 3.0),
              fmt::format("eps_rel {:.3e}, expected within factor 3 of 2.8e-7", e));
      } else {
        c.add(fmt::format("HO l={} {}", l, short_name(v)), std::fabs(e) <= kTable1Tol,
              fmt::format("eps_rel {:.3e} (tol {:.0e})", e, kTable1Tol));
      }
    }
  }
}

void criterion4(Collector& c) {
  using V = HamiltonianVariant;
  {
    const double e = benchmark_error_3d(2, 0, V::NonReg);
    c.add("Coulomb l=0 non-reg", bracket_notation(e) == "6.9[-2]",
          fmt::format("eps_rel {:.4e} -> {} (expected 6.9[-2])", e, bracket_notation(e)));
  }
  {
    const double e = benchmark_error_3d(2, 1, V::NonReg);
    c.add("Coulomb l=1 non-reg", bracket_notation(e) == "-1.0[-3]",
          fmt::format("eps_rel {:.4e} -> {} (expected -1.0[-3])", e, bracket_notation(e)));
  }
  const double l2[] = {8.6e-7, 7.8e-7, 2.3e-6, 8.3e-7, 8.6e-7};
  for (int k = 0; k < 5; ++k) {
    const double e = benchmark_error_3d(2, 2, kVariants[k]);
    c.add(fmt::format("Coulomb l=2 {}", short_name(kVariants[k])), within_factor(e, l2[k], 2.0),
          fmt::format("eps_rel {:.3e}, expected within factor 2 of {:.1e}", e, l2[k]));
  }
  const double l0[] = {2.4e-9, 2.4e-9, 7.6e-9};
  for (int k = 0; k < 3; ++k) {
    const double e = benchmark_error_3d(2, 0, kVariants[k]);
    c.add(fmt::format("Coulomb l=0 {}", short_name(kVariants[k])), within_factor(e, l0[k], 2.0),
          fmt::format("eps_rel {:.3e}, expected magnitude within factor 2 of {:.1e}", e, l0[k]));
  }
  for (V v : {V::Var, V::RegSqrtMesh, V::RegRMesh, V::NonRegVG}) {
    const double e = benchmark_error_3d(2, 1, v);
    c.add(fmt::format("Coulomb l=1 {}", short_name(v)), std::fabs(e) <= kTable2Floor,
          fmt::format("eps_rel {:.3e} (tol {:.0e})", e, kTable2Floor));
  }
}

void criterion5(Collector& c) {
  // tabulated first and fifth pseudostate energies and their printed decimals
  const double energies[2][2] = {{0.1982139, 4.95146}, {0.2145073, 5.38561}};
  const int decimals[2][2] = {{7, 5}, {7, 5}};
  const auto entries = eckart_benchmark();
  for (const auto& e : entries) {
    const int mesh = e.variant == HamiltonianVariant::RegSqrtMesh ? 0 : 1;
    const double tol = e.state == 1 ? kEckartTol1 : e.state == 5 ? kEckartTol5 : kEckartTol10;
    const double err = std::fabs(e.phase.delta_deg - e.reference_deg);
    c.add(fmt::format("Eckart {} E{} phase", short_name(e.variant), e.state), err <= tol,
          fmt::format("delta {:.5f} vs analytic {:.5f}, |diff| {:.2e} (tol {:g}), gamma {:.3f}", e.phase.delta_deg,
                      e.reference_deg, err, tol, e.phase.gamma));
    if (e.state == 1)
      c.add(fmt::format("Eckart {} E1 plateau near gamma 4", short_name(e.variant)),
            e.plateau && e.phase.gamma >= 3.0 && e.phase.gamma <= 5.0,
            fmt::format("plateau {}, gamma {:.3f}", e.plateau, e.phase.gamma));
    if (e.state == 1 || e.state == 5) {
      const int k = e.state == 1 ? 0 : 1;
      c.add(fmt::format("Eckart {} E{} energy", short_name(e.variant), e.state),
            matches_printed(e.energy, energies[mesh][k], decimals[mesh][k], 0.5),
            fmt::format("{:.{}f} vs tabulated {:.{}f}", e.energy, decimals[mesh][k] + 2, energies[mesh][k],
                        decimals[mesh][k]));
    }
  }
}

void criterion6(Collector& c) {
  // (l, mesh, state) -> tabulated mesh result and energy with printed decimals
  struct Row {
    int l;
    HamiltonianVariant variant;
    int state;
    double delta;
    double energy;
    int decimals;
  };
  using V = HamiltonianVariant;
  const Row rows[] = {
      {0, V::RegSqrtMesh, 1, 179.97, 0.0105, 4}, {0, V::RegSqrtMesh, 2, 116.67, 1.8474, 4},
      {0, V::RegRMesh, 1, 179.96, 0.0107, 4},    {0, V::RegRMesh, 2, 112.64, 1.9797, 4},
      {2, V::RegSqrtMesh, 1, 12.471, 2.10795, 5}, {2, V::RegSqrtMesh, 2, 94.460, 3.4183, 4},
      {2, V::RegRMesh, 1, 15.123, 2.19462, 5},   {2, V::RegRMesh, 2, 99.596, 3.5442, 4},
  };
  const auto entries = alpha_alpha_benchmark();
  for (const auto& row : rows) {
    const PhaseEntry* e = nullptr;
    for (const auto& x : entries)
      if (x.l == row.l && x.variant == row.variant && x.state == row.state) e = &x;
    if (!e) {
      c.add(fmt::format("alpha+alpha l={} {} E{}", row.l, short_name(row.variant), row.state), false, "missing entry");
      continue;
    }
    const double tol = row.l == 2 ? kAlphaL2Tol : kAlphaL0Tol;
    const double err = std::fabs(e->phase.delta_deg - row.delta);
    const std::string label = fmt::format("alpha+alpha l={} {} E{}", row.l, short_name(row.variant), row.state);
    c.add(label + " phase", err <= tol,
          fmt::format("delta {:.4f} vs {:.3f}, |diff| {:.2e} (tol {:g}), gamma {:.3f}{}", e->phase.delta_deg,
                      row.delta, err, tol, e->phase.gamma, e->plateau ? "" : " (fallback)"));
    if (row.l == 2)
      c.add(label + " plateau gamma in [0.3, 1.3]", e->plateau && e->phase.gamma >= 0.3 && e->phase.gamma <= 1.3,
            fmt::format("plateau {}, gamma {:.3f}", e->plateau, e->phase.gamma));
    c.add(label + " energy", matches_printed(e->energy, row.energy, row.decimals, 1.0),
          fmt::format("{:.{}f} MeV vs tabulated {:.{}f}", e->energy, row.decimals + 2, row.energy, row.decimals));
  }
}

void criterion7(Collector& c) {
  for (bool coul : {false, true})
    for (auto v : {Variant2D::Var2D, Variant2D::RegSqrtMesh2D}) {
      const double e = benchmark_error_2d(coul, v);
      const double tol = coul ? kTable5CoulombTol : kTable5HoTol;
      c.add(fmt::format("2D {} m=1 {}", coul ? "Coulomb" : "HO", to_string(v)), std::fabs(e) <= tol,
            fmt::format("eps_rel {:.3e} (tol {:.0e})", e, tol));
    }
}

double asymmetry(const Eigen::MatrixXd& h) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      worst = std::max(worst, std::fabs(h(i, j) - h(j, i)) / std::max(1.0, std::fabs(h(i, j))));
  return worst;
}

void criterion8(Collector& c) {
  {
    bool ok = true;
    for (Family f : {Family::NonReg, Family::RegSqrt, Family::RegR}) {
      const double alpha = f == Family::NonReg ? 2.0 : f == Family::RegSqrt ? 1.0 : 0.0;
      for (int n : {1, 5, 12, 30}) {
        const LagrangeMesh mesh({n, alpha, f, 0.7});
        ok = ok && overlap_matrix(mesh, Mode::Gauss).values.isIdentity(0.0);
      }
    }
    c.add("Gauss overlap is the identity", ok, "NonReg, RegSqrt, RegR; N in {1,5,12,30}");
  }
  {
    double worst = 0.0;
    for (auto v : kVariants)
      for (int l = 0; l <= 2; ++l)
        for (const PotentialSpec& pot : {harmonic(), coulomb(), buck_alpha_alpha()})
          worst = std::max(worst, asymmetry(hamiltonian_3d(default_mesh(v, 15, 0.3), l, pot, v).H.values));
    for (auto v : {Variant2D::Var2D, Variant2D::RegSqrtMesh2D})
      for (int m = 0; m <= 2; ++m)
        worst = std::max(worst, asymmetry(hamiltonian_2d(default_mesh(v, 15, 0.3), m, coulomb(), v).H.values));
    c.add("Hamiltonian symmetry", worst <= kSymmetryTol, fmt::format("max asymmetry {:.2e} (tol {:.0e})", worst, kSymmetryTol));
  }
  {
    double worst = 0.0;
    for (int n = 2; n <= 30; ++n) {
      const LagrangeMesh mesh({n, 1.0, Family::RegSqrt, 1.0});
      const Eigen::MatrixXd a = kinetic_matrix(mesh, Mode::Exact).values;
      const Eigen::MatrixXd b = kinetic_matrix(mesh, Mode::Gauss).values;
      worst = std::max(worst, ((a - b).cwiseAbs().array() / a.cwiseAbs().array().max(1.0)).maxCoeff());
    }
    c.add("RegSqrt alpha=1 kinetic exact == Gauss", worst <= kKineticTol,
          fmt::format("max diff {:.2e} (tol {:.0e})", worst, kKineticTol));
  }
  {
    const PotentialSpec v = eckart();
    double worst = 0.0;
    for (auto variant : {HamiltonianVariant::RegSqrtMesh, HamiltonianVariant::RegRMesh}) {
      const MeshSpec spec = default_mesh(variant, 15, 0.1);
      const auto ps = pseudostates(solve_bound_states(hamiltonian_3d(spec, 0, v, variant)));
      for (int k : {0, 4, 9}) {
        const double t0 = tan_delta(ps[k], spec, 0, v, 0.0, 4.0).tan_delta;
        for (double s : {-3.7, 1e5, 1e-4}) {
          Pseudostate scaled = ps[k];
          scaled.coefficients *= s;
          const double t1 = tan_delta(scaled, spec, 0, v, 0.0, 4.0).tan_delta;
          worst = std::max(worst, std::fabs(t1 - t0) / std::fabs(t0));
        }
      }
    }
    c.add("tan delta invariant under coefficient rescaling", worst <= kRescaleTol,
          fmt::format("max rel change {:.2e} (tol {:.0e})", worst, kRescaleTol));
  }
  {
    double worst = 0.0;
    for (int l : {0, 1, 2})
      for (double eta : {0.0, 0.5, -0.5, 2.0, -2.0})
        for (double x : {0.5, 1.0, 5.0, 20.0}) worst = std::max(worst, std::fabs(coulomb_wave(l, eta, x).wronskian() - 1.0));
    c.add("Coulomb Wronskian", worst <= kWronskianTol, fmt::format("max |W - 1| {:.2e} (tol {:.0e})", worst, kWronskianTol));
  }
  {
    double worst = 1.0;
    for (int table : {1, 2}) {
      const PotentialSpec pot = table == 1 ? harmonic() : coulomb();
      for (int l = 0; l <= 2; ++l) {
        const MeshSpec spec = default_mesh(HamiltonianVariant::Var, table == 1 ? 20 : 10, table == 1 ? 0.09 : 0.9);
        const BoundSpectrum sp = solve_bound_states(hamiltonian_3d(spec, l, pot, HamiltonianVariant::Var));
        for (int n = 0; n < 3; ++n)
          worst = std::min(worst, relative_error(sp.energies(n), *analytic_energy(pot, 3, l, n)));
      }
    }
    c.add("variational bound for var", worst >= -kVariationalTol,
          fmt::format("min eps_rel {:.2e} (floor {:.0e})", worst, -kVariationalTol));
  }
  {
    bool ok = true;
    std::string detail = "Coulomb l=0 var, h=0.9, N=10..15, lowest 3 states";
    Eigen::VectorXd previous;
    for (int n = 10; n <= 15; ++n) {
      const BoundSpectrum sp = solve_bound_states(
          hamiltonian_3d(default_mesh(HamiltonianVariant::Var, n, 0.9), 0, coulomb(), HamiltonianVariant::Var));
      const Eigen::VectorXd e = sp.energies.head(3);
      if (previous.size() == 3)
        for (int k = 0; k < 3; ++k)
          if (e(k) > previous(k) + 1e-13 * std::fabs(previous(k))) {
            ok = false;
            detail = fmt::format("state {} rises from {:.15g} to {:.15g} at N={}", k + 1, previous(k), e(k), n);
          }
      previous = e;
    }
    c.add("eigenvalue interlacing N -> N+1", ok, detail);
  }
}

void criterion9(Collector& c) {
  int agree = 0, total = 0;
  std::string mismatches;
  for (int table : {1, 2}) {
    const PotentialSpec pot = table == 1 ? harmonic() : coulomb();
    for (int l = 0; l <= 2; ++l) {
      const double reference = std::max(std::fabs(benchmark_error_3d(table, l, HamiltonianVariant::Var)), kTable2Floor);
      for (auto v : kVariants) {
        if (v == HamiltonianVariant::Var) continue;
        const MeshSpec spec = default_mesh(v, table == 1 ? 20 : 10, table == 1 ? 0.09 : 0.9);
        const bool observed = std::fabs(benchmark_error_3d(table, l, v)) >= kLossRatio * reference;
        const bool predicted = predict_accuracy_loss(v, spec, l, pot) == Singularity::AccuracyLoss;
        ++total;
        if (observed == predicted) {
          ++agree;
        } else {
          mismatches += fmt::format(" {} l={} {}", pot.label, l, short_name(v));
        }
      }
    }
  }
  c.add("classifier matches observed loss pattern", agree == total,
        fmt::format("{}/{} cells agree{}", agree, total, mismatches.empty() ? "" : ";" + mismatches));
  const auto s2d = classify_singularity(Family::RegSqrt, 0.0, 1, 2, Dimension::TwoD);
  c.add("2D m=1 centrifugal is safe", s2d == Singularity::Safe, to_string(s2d));
}

struct Entry {
  const char* title;
  double budget;
  void (*body)(Collector&);
};

const Entry kEntries[kCriterionCount] = {
    {"quadrature moment exactness", 1.0, criterion1},
    {"closed-form matrix elements vs oracle", 5.0, criterion2},
    {"harmonic oscillator relative errors", 0.0, criterion3},
    {"Coulomb relative errors", 1.0, criterion4},
    {"Eckart phase shifts", 1.0, criterion5},
    {"alpha+alpha phase shifts", 2.0, criterion6},
    {"2D relative errors", 1.0, criterion7},
    {"property suite", 0.0, criterion8},
    {"singularity classifier", 0.0, criterion9},
};

}  // namespace

CriterionResult evaluate(int id) {
  require(id >= 1 && id <= kCriterionCount, "criterion must be in 1..9, got " + std::to_string(id));
  const Entry& entry = kEntries[id - 1];
  CriterionResult out;
  out.id = id;
  out.title = entry.title;
  out.budget_seconds = entry.budget;
  Collector c;
  const auto start = Clock::now();
  try {
    entry.body(c);
  } catch (const Error& e) {
    c.add("evaluation", false, std::string(to_string(e.kind())) + ": " + e.what());
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (entry.budget > 0.0)
    c.add("runtime", out.seconds < entry.budget, fmt::format("{:.3f} s (budget {:g} s)", out.seconds, entry.budget));
  out.checks = std::move(c.checks);
  out.pass = !out.checks.empty();
  for (const auto& ch : out.checks) out.pass = out.pass && ch.pass;
  return out;
}

std::vector<int> criteria_for_table(int table) {
  require(table >= 1 && table <= 5, "table: must be in 1..5, got " + std::to_string(table));
  return {table + 2};
}

}  // namespace lagmesh::acceptance
