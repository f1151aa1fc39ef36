#include "lagmesh/matelem.hpp"

#include <cmath>
#include <string>

#include "lagmesh/error.hpp"
#include "lagmesh/quadrature.hpp"

namespace lagmesh {

const char* to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "gauss"; }

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Overlap: return "overlap";
    case OperatorKind::Kinetic: return "kinetic";
    case OperatorKind::InvR: return "1/r";
    case OperatorKind::InvR2: return "1/r^2";
    case OperatorKind::R: return "r";
    case OperatorKind::R2: return "r^2";
    case OperatorKind::DDr: return "d/dr";
    case OperatorKind::Potential: return "potential";
    case OperatorKind::Centrifugal: return "centrifugal";
    case OperatorKind::Kinetic2D: return "kinetic2d";
    case OperatorKind::MTerm: return "m-term";
    case OperatorKind::Hamiltonian: return "hamiltonian";
  }
  return "?";
}

std::string OperatorTag::describe() const {
  std::string out = to_string(kind);
  if (kind == OperatorKind::Potential && !name.empty()) out += "(" + name + ")";
  if (kind == OperatorKind::Centrifugal || kind == OperatorKind::MTerm)
    out += "(" + std::to_string(index) + ")";
  return out;
}

const char* to_string(OracleOperator op) {
  switch (op) {
    case OracleOperator::Overlap: return "overlap";
    case OracleOperator::InvR: return "1/r";
    case OracleOperator::InvR2: return "1/r^2";
    case OracleOperator::R: return "r";
    case OracleOperator::R2: return "r^2";
    case OracleOperator::DDr: return "d/dr";
    case OracleOperator::D2: return "d^2/dr^2";
    case OracleOperator::Combined2D: return "d^2/dr^2 + 1/4r^2";
  }
  return "?";
}

namespace {

using Eigen::MatrixXd;

double parity(int i, int j) { return ((i - j) % 2 == 0) ? 1.0 : -1.0; }

bool near_integer(double x, double k) { return std::fabs(x - k) < 1e-12; }

OperatorMatrix make(const LagrangeMesh& mesh, MatrixXd values, Mode mode, OperatorKind kind) {
  return OperatorMatrix{std::move(values), mode, OperatorTag{kind, 0, {}}, mesh.spec()};
}

void symmetrize(MatrixXd& a) { a = 0.5 * (a + a.transpose()).eval(); }

}  // namespace

double oracle_weight_power(const LagrangeMesh& mesh, OracleOperator op) {
  const double s = mesh.origin_exponent();
  double beta = 0.0;
  switch (op) {
    case OracleOperator::Overlap: beta = 2 * s; break;
    case OracleOperator::InvR: beta = 2 * s - 1; break;
    case OracleOperator::InvR2: beta = 2 * s - 2; break;
    case OracleOperator::R: beta = 2 * s + 1; break;
    case OracleOperator::R2: beta = 2 * s + 2; break;
    case OracleOperator::DDr:
      // F' ~ s r^{s-1} unless s = 0
      beta = near_integer(s, 0.0) ? 0.0 : 2 * s - 1;
      break;
    case OracleOperator::D2:
      // F'' ~ s(s-1) r^{s-2}; the r^{s-1} term also vanishes for s = 0
      if (near_integer(s, 0.0))
        beta = 0.0;
      else if (near_integer(s, 1.0))
        beta = 1.0;
      else
        beta = 2 * s - 2;
      break;
    case OracleOperator::Combined2D:
      // (s - 1/2)^2 r^{s-2} leading term
      beta = near_integer(s, 0.5) ? 2 * s - 1 : 2 * s - 2;
      break;
  }
  if (beta <= -1.0 + 1e-12)
    throw_error(ErrorKind::Divergence, std::string("matrix elements of ") + to_string(op) + " diverge for " +
                                           to_string(mesh.spec().family) +
                                           " alpha = " + std::to_string(mesh.spec().alpha));
  require(beta >= -1e-12, std::string("oracle needs a non-negative origin power for ") + to_string(op));
  return std::max(beta, 0.0);
}

namespace {

double combine(OracleOperator op, const BasisJet& fi, const BasisJet& fj, double x) {
  switch (op) {
    case OracleOperator::Overlap: return fi.value * fj.value;
    case OracleOperator::InvR: return fi.value * fj.value / x;
    case OracleOperator::InvR2: return fi.value * fj.value / (x * x);
    case OracleOperator::R: return fi.value * fj.value * x;
    case OracleOperator::R2: return fi.value * fj.value * x * x;
    case OracleOperator::DDr: return fi.value * fj.first;
    case OracleOperator::D2: return fi.value * fj.second;
    case OracleOperator::Combined2D: return fi.value * (fj.second + fj.value / (4 * x * x));
  }
  return 0.0;
}

constexpr int kOracleExtraOrder = 10;

}  // namespace

double exact_element_oracle(const LagrangeMesh& mesh, OracleOperator op, int i, int j) {
  require(i >= 0 && i < mesh.size() && j >= 0 && j < mesh.size(), "oracle index out of range");
  const double beta = oracle_weight_power(mesh, op);
  const QuadratureRule rule = generate_rule(mesh.size() + kOracleExtraOrder, beta);
  return integrate(rule, [&](double x) {
    return combine(op, basis_jet(mesh, i, x), basis_jet(mesh, j, x), x);
  });
}

MatrixXd oracle_matrix(const LagrangeMesh& mesh, OracleOperator op) {
  const int n = mesh.size();
  const double beta = oracle_weight_power(mesh, op);
  const QuadratureRule rule = generate_rule(n + kOracleExtraOrder, beta);
  MatrixXd out = MatrixXd::Zero(n, n);
  std::vector<BasisJet> jets(n);
  for (int k = 0; k < rule.order(); ++k) {
    const double x = rule.node(k);
    for (int j = 0; j < n; ++j) jets[j] = basis_jet(mesh, j, x);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) out(i, j) += rule.weight(k) * combine(op, jets[i], jets[j], x);
  }
  if (!out.allFinite()) throw_error(ErrorKind::Evaluation, std::string("oracle integral of ") + to_string(op) + " is not finite");
  return out;
}

OperatorMatrix overlap_matrix(const LagrangeMesh& mesh, Mode mode) {
  const int n = mesh.size();
  if (mode == Mode::Gauss || mesh.spec().family != Family::RegR)
    return make(mesh, MatrixXd::Identity(n, n), mode, OperatorKind::Overlap);
  MatrixXd s = oracle_matrix(mesh, OracleOperator::Overlap);
  symmetrize(s);
  return make(mesh, std::move(s), mode, OperatorKind::Overlap);
}

OperatorMatrix power_matrix(const LagrangeMesh& mesh, int p, Mode mode) {
  require(p == -2 || p == -1 || p == 1 || p == 2, "power must be one of -2, -1, 1, 2; got " + std::to_string(p));
  const auto kind = p == -2 ? OperatorKind::InvR2
                    : p == -1 ? OperatorKind::InvR
                    : p == 1  ? OperatorKind::R
                              : OperatorKind::R2;
  const int n = mesh.size();
  const auto& spec = mesh.spec();
  MatrixXd a = MatrixXd::Zero(n, n);
  if (mode == Mode::Gauss) {
    for (int i = 0; i < n; ++i) a(i, i) = std::pow(mesh.node(i), p);
    return make(mesh, std::move(a), mode, kind);
  }
  if (spec.family != Family::RegSqrt) {
    const auto op = p == -2 ? OracleOperator::InvR2
                    : p == -1 ? OracleOperator::InvR
                    : p == 1  ? OracleOperator::R
                              : OracleOperator::R2;
    a = oracle_matrix(mesh, op);
    symmetrize(a);
    return make(mesh, std::move(a), mode, kind);
  }

  const double alpha = spec.alpha;
  if (p == -2 && alpha == 0.0)
    throw_error(ErrorKind::Divergence, "exact 1/r^2 elements diverge on the RegSqrt alpha = 0 mesh");
  for (int i = 0; i < n; ++i) {
    const double ri = mesh.node(i);
    for (int j = 0; j < n; ++j) {
      const double rj = mesh.node(j);
      const double sg = parity(i, j);
      switch (p) {
        case -1: a(i, j) = i == j ? 1.0 / ri : 0.0; break;
        case -2: a(i, j) = (i == j ? 1.0 / (ri * ri) : 0.0) + sg / (alpha * ri * rj); break;
        case 1: a(i, j) = (i == j ? ri : 0.0) + sg; break;
        case 2: a(i, j) = (i == j ? ri * ri : 0.0) + sg * (2.0 * n + alpha + 1.0 + ri + rj); break;
      }
    }
  }
  return make(mesh, std::move(a), mode, kind);
}

OperatorMatrix kinetic_matrix(const LagrangeMesh& mesh, Mode mode) {
  const int n = mesh.size();
  const auto& spec = mesh.spec();
  MatrixXd t(n, n);
  if (spec.family == Family::RegSqrt) {
    const double alpha = spec.alpha;
    if (mode == Mode::Exact && alpha == 0.0)
      throw_error(ErrorKind::Divergence, "exact d^2/dr^2 elements diverge on the RegSqrt alpha = 0 mesh");
    const double c = 1.0 - alpha * alpha;
    for (int i = 0; i < n; ++i) {
      const double ri = mesh.node(i);
      for (int j = 0; j < n; ++j) {
        const double rj = mesh.node(j);
        if (i == j) {
          t(i, i) = -(2.0 * (2.0 * n + alpha + 1.0) - ri + c / ri) / (12.0 * ri);
        } else {
          const double d = ri - rj;
          t(i, j) = -parity(i, j) * 2.0 / (d * d);
        }
        if (mode == Mode::Exact) t(i, j) += -parity(i, j) * c / (4.0 * alpha * ri * rj);
      }
    }
    return make(mesh, std::move(t), mode, OperatorKind::Kinetic);
  }
  if (mode == Mode::Exact) {
    t = oracle_matrix(mesh, OracleOperator::D2);
  } else {
    const NodeDerivatives nd = derivative_values_at_nodes(mesh);
    for (int i = 0; i < n; ++i) t.row(i) = std::sqrt(mesh.weight(i)) * nd.second.row(i);
  }
  symmetrize(t);
  return make(mesh, std::move(t), mode, OperatorKind::Kinetic);
}

OperatorMatrix ddr_matrix(const LagrangeMesh& mesh) {
  require(mesh.spec().family == Family::RegSqrt, "d/dr closed form needs the RegSqrt family");
  const int n = mesh.size();
  MatrixXd a = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a(i, j) = parity(i, j) / (mesh.node(i) - mesh.node(j));
  return make(mesh, std::move(a), Mode::Exact, OperatorKind::DDr);
}

OperatorMatrix combined_2d_matrix(const LagrangeMesh& mesh) {
  const auto& spec = mesh.spec();
  require(spec.family == Family::RegSqrt && spec.alpha == 0.0,
          "combined 2D operator needs the RegSqrt alpha = 0 mesh");
  const int n = mesh.size();
  MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    const double ri = mesh.node(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        a(i, i) = -(2.0 * (2.0 * n + 1.0) - ri - 2.0 / ri) / (12.0 * ri);
      } else {
        const double d = ri - mesh.node(j);
        a(i, j) = -parity(i, j) * 2.0 / (d * d);
      }
    }
  }
  return make(mesh, std::move(a), Mode::Exact, OperatorKind::Kinetic2D);
}

OperatorMatrix potential_matrix(const LagrangeMesh& mesh, const PotentialSpec& v, Mode mode) {
  const int n = mesh.size();
  const double h = mesh.h();
  MatrixXd a = MatrixXd::Zero(n, n);
  if (mode == Mode::Gauss) {
    for (int i = 0; i < n; ++i) a(i, i) = evaluate(v, h * mesh.node(i));
  } else if (v.is_power_sum()) {
    for (const auto& t : v.terms) {
      const int p = static_cast<int>(std::lround(t.p));
      const MatrixXd m =
          p == 0 ? overlap_matrix(mesh, Mode::Exact).values : power_matrix(mesh, p, Mode::Exact).values;
      a += t.c * std::pow(h, p) * m;
    }
  } else {
    const double s = mesh.origin_exponent();
    const double beta = std::max(0.0, 2.0 * s - origin_inverse_power(v));
    auto quadrature = [&](int order) {
      const QuadratureRule rule = generate_rule(order, beta);
      MatrixXd q = MatrixXd::Zero(n, n);
      std::vector<double> f(n);
      for (int k = 0; k < rule.order(); ++k) {
        const double x = rule.node(k);
        for (int j = 0; j < n; ++j) f[j] = basis_jet(mesh, j, x).value;
        const double wv = rule.weight(k) * evaluate(v, h * x);
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i) q(i, j) += wv * f[i] * f[j];
      }
      return q;
    };
    // V is not polynomial, so double the rule until the matrix settles
    int order = n + 40;
    a = quadrature(order);
    for (bool settled = false; !settled;) {
      if (order > 2560) throw_error(ErrorKind::Convergence, "potential matrix quadrature did not settle for '" + v.label + "'");
      order *= 2;
      MatrixXd next = quadrature(order);
      settled = (next - a).cwiseAbs().maxCoeff() <= 1e-14 * std::max(1.0, next.cwiseAbs().maxCoeff());
      a = std::move(next);
    }
    symmetrize(a);
  }
  OperatorMatrix out = make(mesh, std::move(a), mode, OperatorKind::Potential);
  out.tag.name = v.label;
  return out;
}

const char* to_string(HamiltonianVariant v) {
  switch (v) {
    case HamiltonianVariant::Var: return "var";
    case HamiltonianVariant::RegSqrtMesh: return "reg-sqrt";
    case HamiltonianVariant::RegRMesh: return "reg-r";
    case HamiltonianVariant::NonReg: return "non-reg";
    case HamiltonianVariant::NonRegVG: return "non-reg-vg";
  }
  return "?";
}

const char* to_string(Variant2D v) { return v == Variant2D::Var2D ? "var2d" : "reg-sqrt-2d"; }

HamiltonianVariant variant_from_string(const std::string& name) {
  if (name == "var") return HamiltonianVariant::Var;
  if (name == "reg-sqrt" || name == "regsqrt") return HamiltonianVariant::RegSqrtMesh;
  if (name == "reg-r" || name == "regr") return HamiltonianVariant::RegRMesh;
  if (name == "non-reg" || name == "nonreg") return HamiltonianVariant::NonReg;
  if (name == "non-reg-vg" || name == "nonreg-vg") return HamiltonianVariant::NonRegVG;
  throw_error(ErrorKind::InvalidArgument, "unknown variant '" + name + "'");
}

Variant2D variant2d_from_string(const std::string& name) {
  if (name == "var" || name == "var2d") return Variant2D::Var2D;
  if (name == "reg-sqrt" || name == "reg-sqrt-2d" || name == "regsqrt") return Variant2D::RegSqrtMesh2D;
  throw_error(ErrorKind::InvalidArgument, "unknown 2D variant '" + name + "'");
}

MeshSpec default_mesh(HamiltonianVariant v, int n, double h) {
  switch (v) {
    case HamiltonianVariant::Var:
    case HamiltonianVariant::RegSqrtMesh: return {n, 1.0, Family::RegSqrt, h};
    case HamiltonianVariant::RegRMesh: return {n, 0.0, Family::RegR, h};
    case HamiltonianVariant::NonReg:
    case HamiltonianVariant::NonRegVG: return {n, 2.0, Family::NonReg, h};
  }
  return {};
}

MeshSpec default_mesh(Variant2D, int n, double h) { return {n, 0.0, Family::RegSqrt, h}; }

TermModes term_modes(HamiltonianVariant v) {
  switch (v) {
    case HamiltonianVariant::Var: return {Mode::Exact, Mode::Exact, Mode::Exact};
    case HamiltonianVariant::RegSqrtMesh:
    case HamiltonianVariant::RegRMesh: return {Mode::Gauss, Mode::Gauss, Mode::Gauss};
    case HamiltonianVariant::NonReg: return {Mode::Exact, Mode::Gauss, Mode::Gauss};
    case HamiltonianVariant::NonRegVG: return {Mode::Exact, Mode::Exact, Mode::Gauss};
  }
  return {};
}

namespace {

Family expected_family(HamiltonianVariant v) { return default_mesh(v, 1, 1.0).family; }

OperatorMatrix tagged(MatrixXd values, Mode mode, OperatorKind kind, const MeshSpec& mesh, int index = 0,
                      std::string name = {}) {
  return OperatorMatrix{std::move(values), mode, OperatorTag{kind, index, std::move(name)}, mesh};
}

}  // namespace

Hamiltonian hamiltonian_3d(const MeshSpec& spec, int l, const PotentialSpec& v, HamiltonianVariant variant) {
  spec.validate();
  require(l >= 0, "l must be >= 0");
  require(l < spec.n, "l = " + std::to_string(l) + " needs N > l, got N = " + std::to_string(spec.n));
  require(spec.family == expected_family(variant),
          std::string("variant ") + to_string(variant) + " needs the " + to_string(expected_family(variant)) +
              " family, got " + to_string(spec.family));
  const LagrangeMesh mesh(spec);
  const TermModes modes = term_modes(variant);
  const double h2 = spec.h * spec.h;

  MatrixXd h = -0.5 / h2 * kinetic_matrix(mesh, modes.kinetic).values;
  if (l > 0) h += 0.5 * l * (l + 1) / h2 * power_matrix(mesh, -2, modes.centrifugal).values;
  h += potential_matrix(mesh, v, modes.potential).values;
  symmetrize(h);

  const Mode overlap_mode = variant == HamiltonianVariant::Var ? Mode::Exact : Mode::Gauss;
  return Hamiltonian{tagged(std::move(h), modes.kinetic, OperatorKind::Hamiltonian, spec, l, v.label),
                     overlap_matrix(mesh, overlap_mode), spec};
}

Hamiltonian hamiltonian_2d(const MeshSpec& spec, int m, const PotentialSpec& v, Variant2D variant) {
  spec.validate();
  require(m >= 0, "m must be >= 0");
  require(m < spec.n, "m = " + std::to_string(m) + " needs N > m, got N = " + std::to_string(spec.n));
  require(spec.family == Family::RegSqrt && spec.alpha == 0.0,
          "2D Hamiltonians are defined on the RegSqrt alpha = 0 mesh");
  const double h2 = spec.h * spec.h;

  if (variant == Variant2D::RegSqrtMesh2D) {
    const LagrangeMesh mesh(spec);
    MatrixXd h = -0.5 / h2 * combined_2d_matrix(mesh).values;
    for (int i = 0; i < spec.n; ++i) {
      const double ri = mesh.node(i);
      h(i, i) += 0.5 * m * m / (h2 * ri * ri);
    }
    h += potential_matrix(mesh, v, Mode::Gauss).values;
    return Hamiltonian{tagged(std::move(h), Mode::Gauss, OperatorKind::Hamiltonian, spec, m, v.label),
                       overlap_matrix(mesh, Mode::Gauss), spec};
  }

  require(spec.n >= 2, "Var2D needs N >= 2");
  const MeshSpec basis{spec.n - 1, 2.0, Family::RegSqrt, spec.h};
  const LagrangeMesh mesh(basis);
  MatrixXd h = -0.5 / h2 * kinetic_matrix(mesh, Mode::Exact).values;
  h += (4.0 * m * m - 1.0) / (8.0 * h2) * power_matrix(mesh, -2, Mode::Exact).values;
  h += potential_matrix(mesh, v, Mode::Exact).values;
  symmetrize(h);
  return Hamiltonian{tagged(std::move(h), Mode::Exact, OperatorKind::Hamiltonian, basis, m, v.label),
                     overlap_matrix(mesh, Mode::Exact), basis};
}

const char* to_string(Singularity s) { return s == Singularity::Safe ? "safe" : "accuracy-loss"; }

Singularity classify_singularity(Family family, double alpha, int angular, int s, Dimension dim) {
  require(s >= 0 && s <= 2, "operator inverse power must be 0, 1 or 2");
  require(angular >= 0, "angular momentum must be >= 0");
  const double b = origin_exponent(family, alpha);
  const double lead = dim == Dimension::ThreeD ? angular + 1.0 : angular + 0.5;
  const double e = b + lead - s - alpha;
  return e < -1e-12 ? Singularity::AccuracyLoss : Singularity::Safe;
}

std::vector<GaussOperator> gauss_approximated_operators(HamiltonianVariant v, const MeshSpec& mesh, int l,
                                                        const PotentialSpec& pot) {
  std::vector<GaussOperator> out;
  const TermModes modes = term_modes(v);
  const bool kinetic_exact_at_gauss = mesh.family == Family::RegSqrt && mesh.alpha == 1.0;
  if (modes.kinetic == Mode::Gauss && !kinetic_exact_at_gauss) out.push_back({OperatorKind::Kinetic, 2});
  if (modes.centrifugal == Mode::Gauss && l > 0) out.push_back({OperatorKind::Centrifugal, 2});
  if (modes.potential == Mode::Gauss) out.push_back({OperatorKind::Potential, origin_inverse_power(pot)});
  return out;
}

Singularity predict_accuracy_loss(HamiltonianVariant v, const MeshSpec& mesh, int l, const PotentialSpec& pot) {
  for (const auto& op : gauss_approximated_operators(v, mesh, l, pot)) {
    if (classify_singularity(mesh.family, mesh.alpha, l, std::min(op.inverse_power, 2), Dimension::ThreeD) ==
        Singularity::AccuracyLoss)
      return Singularity::AccuracyLoss;
  }
  return Singularity::Safe;
}

}  // namespace lagmesh
