#include "lagmesh/basis.hpp"

#include <cmath>
#include <string>

#include "lagmesh/specfun.hpp"

namespace lagmesh {

const char* to_string(Family family) {
  switch (family) {
    case Family::NonReg: return "nonreg";
    case Family::RegSqrt: return "reg-sqrt";
    case Family::RegR: return "reg-r";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "nonreg" || name == "non-reg") return Family::NonReg;
  if (name == "reg-sqrt" || name == "regsqrt") return Family::RegSqrt;
  if (name == "reg-r" || name == "regr") return Family::RegR;
  throw_error(ErrorKind::InvalidArgument, "unknown mesh family '" + name + "'");
}

void MeshSpec::validate() const {
  require(n >= 1, "mesh N must be >= 1, got " + std::to_string(n));
  require(std::isfinite(alpha) && alpha >= 0.0, "mesh alpha must be >= 0");
  require(std::isfinite(h) && h > 0.0, "mesh scaling factor h must be > 0");
}

double basis_normalization(int n, double alpha) {
  require(n >= 0 && alpha >= 0.0, "basis normalization needs N >= 0, alpha >= 0");
  return std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0));
}

double origin_exponent(Family family, double alpha) {
  switch (family) {
    case Family::NonReg: return 0.5 * alpha;
    case Family::RegSqrt: return 0.5 * (alpha + 1.0);
    case Family::RegR: return 0.5 * alpha + 1.0;
  }
  return 0.0;
}

LagrangeMesh::LagrangeMesh(const MeshSpec& spec)
    : spec_((spec.validate(), spec)), rule_(generate_rule(spec.n, spec.alpha)) {}

namespace {

void check_index(const LagrangeMesh& mesh, int j) {
  require(j >= 0 && j < mesh.size(), "basis index " + std::to_string(j) + " outside [0, " +
                                         std::to_string(mesh.size()) + ")");
}

}  // namespace

BasisJet basis_jet(const LagrangeMesh& mesh, int j, double x) {
  check_index(mesh, j);
  require(x > 0.0, "basis derivatives need x > 0");
  const int n = mesh.size();
  const double rj = mesh.node(j);

  double p = 1.0, dp = 0.0, d2p = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    const double inv = 1.0 / (rj - mesh.node(i));
    const double q = (x - mesh.node(i)) * inv;
    d2p = d2p * q + 2.0 * dp * inv;
    dp = dp * q + p * inv;
    p *= q;
  }

  const double s = mesh.origin_exponent();
  const double g = std::pow(x / rj, s) * std::exp(-0.5 * (x - rj)) / std::sqrt(mesh.weight(j));
  const double lg = s / x - 0.5;
  const double g1 = g * lg;
  const double g2 = g * (lg * lg - s / (x * x));
  return {p * g, dp * g + p * g1, d2p * g + 2.0 * dp * g1 + p * g2};
}

double evaluate_basis(const LagrangeMesh& mesh, int j, double r) {
  check_index(mesh, j);
  require(r >= 0.0, "basis evaluation needs r >= 0, got " + std::to_string(r));
  const auto& spec = mesh.spec();
  const int n = spec.n;
  const double x = r / spec.h;
  const double rj = mesh.node(j);

  double quotient;
  const double dx = x - rj;
  if (std::fabs(dx) < 1e-8 * (1.0 + rj)) {
    const double d1 = detail::laguerre_derivative<double>(n, spec.alpha, rj);
    const double d2 = detail::laguerre_value<double>(n - 2, spec.alpha + 2.0, rj);
    quotient = n >= 2 ? d1 + 0.5 * d2 * dx : d1;
  } else {
    quotient = detail::laguerre_value<double>(n, spec.alpha, x) / dx;
  }
  // (-1)^j with the 1-based index of the definition
  const double sign = (j % 2 == 0) ? -1.0 : 1.0;
  double f = sign * std::sqrt(rj / basis_normalization(n, spec.alpha)) * quotient *
             std::pow(x, 0.5 * spec.alpha) * std::exp(-0.5 * x);
  switch (spec.family) {
    case Family::NonReg: break;
    case Family::RegSqrt: f *= std::sqrt(x / rj); break;
    case Family::RegR: f *= x / rj; break;
  }
  return f / std::sqrt(spec.h);
}

NodeDerivatives derivative_values_at_nodes(const LagrangeMesh& mesh) {
  const int n = mesh.size();
  NodeDerivatives out{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const BasisJet jet = basis_jet(mesh, j, mesh.node(i));
      out.first(i, j) = jet.first;
      out.second(i, j) = jet.second;
    }
  }
  return out;
}

double reconstruct_wavefunction(const LagrangeMesh& mesh, std::span<const double> coeffs, double r) {
  require(static_cast<int>(coeffs.size()) == mesh.size(),
          "coefficient vector length " + std::to_string(coeffs.size()) +
              " does not match mesh size " + std::to_string(mesh.size()));
  double u = 0.0;
  for (int j = 0; j < mesh.size(); ++j) {
    require(std::isfinite(coeffs[j]), "coefficients must be finite");
    if (coeffs[j] != 0.0) u += coeffs[j] * evaluate_basis(mesh, j, r);
  }
  return u;
}

}  // namespace lagmesh
