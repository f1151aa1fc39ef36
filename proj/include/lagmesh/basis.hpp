#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>

#include "lagmesh/quadrature.hpp"

namespace lagmesh {

/// Lagrange-Laguerre function families: f_j (non-regularized), sqrt(r/r_j) f_j
/// and (r/r_j) f_j.
enum class Family { NonReg, RegSqrt, RegR };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

/// Identifies one scaled Lagrange mesh.
struct MeshSpec {
  int n = 0;
  double alpha = 0.0;
  Family family = Family::RegSqrt;
  double h = 1.0;

  void validate() const;
  friend bool operator==(const MeshSpec&, const MeshSpec&) = default;
};

/// h_N^{(alpha)} = Gamma(N + alpha + 1) / N!.
double basis_normalization(int n, double alpha);

/// Leading power of the unscaled basis functions at the origin, i.e. the s in
/// F_j(r) ~ r^s: alpha/2, (alpha+1)/2 or alpha/2 + 1.
double origin_exponent(Family family, double alpha);

/// Mesh spec together with its Gauss-Laguerre rule. Immutable.
class LagrangeMesh {
 public:
  explicit LagrangeMesh(const MeshSpec& spec);

  const MeshSpec& spec() const noexcept { return spec_; }
  const QuadratureRule& rule() const noexcept { return rule_; }
  int size() const noexcept { return spec_.n; }
  double h() const noexcept { return spec_.h; }
  /// Unscaled mesh point r_i (zero of L_N^{(alpha)}).
  double node(int i) const { return rule_.node(i); }
  /// Gauss weight lambda_i.
  double weight(int i) const { return rule_.weight(i); }
  double origin_exponent() const { return lagmesh::origin_exponent(spec_.family, spec_.alpha); }

 private:
  MeshSpec spec_;
  QuadratureRule rule_;
};

/// Value and first two derivatives of an unscaled basis function.
struct BasisJet {
  double value;
  double first;
  double second;
};

/// Unscaled F_j(x) with derivatives, evaluated through the Lagrange product
///   F_j(x) = lambda_j^{-1/2} prod_{i != j} (x - r_i)/(r_j - r_i) (x/r_j)^s e^{-(x - r_j)/2},
/// which is the same function as the Laguerre-quotient definition but has no
/// removable singularity. x must be > 0 when derivatives are singular at 0.
BasisJet basis_jet(const LagrangeMesh& mesh, int j, double x);

/// Scaled basis function h^{-1/2} F_j(r/h), j in [0, N), from the Laguerre
/// quotient L_N(x)/(x - r_j).
double evaluate_basis(const LagrangeMesh& mesh, int j, double r);

struct NodeDerivatives {
  Eigen::MatrixXd first;   ///< first(i, j) = F_j'(r_i), unscaled
  Eigen::MatrixXd second;  ///< second(i, j) = F_j''(r_i), unscaled
};

/// Derivatives of each basis function at each unscaled mesh point. For the
/// sqrt(r)-regularized family lambda_i^{1/2} times these reproduce the closed
/// forms; other families use the same analytic differentiation.
NodeDerivatives derivative_values_at_nodes(const LagrangeMesh& mesh);

/// sum_j c_j * evaluate_basis(mesh, j, r).
double reconstruct_wavefunction(const LagrangeMesh& mesh, std::span<const double> coeffs, double r);

}  // namespace lagmesh
