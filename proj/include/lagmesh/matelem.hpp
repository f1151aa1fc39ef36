#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lagmesh/basis.hpp"
#include "lagmesh/potentials.hpp"

namespace lagmesh {

enum class Mode { Exact, Gauss };

const char* to_string(Mode mode);

enum class OperatorKind {
  Overlap,
  Kinetic,
  InvR,
  InvR2,
  R,
  R2,
  DDr,
  Potential,
  Centrifugal,
  Kinetic2D,
  MTerm,
  Hamiltonian,
};

const char* to_string(OperatorKind kind);

/// Operator identity; `index` carries l for Centrifugal and m for MTerm,
/// `name` the potential label.
struct OperatorTag {
  OperatorKind kind = OperatorKind::Overlap;
  int index = 0;
  std::string name;

  std::string describe() const;
};

/// Matrix of one operator between the (unscaled unless noted) basis functions
/// of `mesh`.
struct OperatorMatrix {
  Eigen::MatrixXd values;
  Mode mode = Mode::Gauss;
  OperatorTag tag;
  MeshSpec mesh;
};

OperatorMatrix overlap_matrix(const LagrangeMesh& mesh, Mode mode);

/// <F_i| r^p |F_j> on the unscaled mesh, p in {-2, -1, 1, 2}.
OperatorMatrix power_matrix(const LagrangeMesh& mesh, int p, Mode mode);

/// <F_i| d^2/dr^2 |F_j> on the unscaled mesh.
OperatorMatrix kinetic_matrix(const LagrangeMesh& mesh, Mode mode);

/// <F_i| d/dr |F_j>, closed form, RegSqrt only. Antisymmetric.
OperatorMatrix ddr_matrix(const LagrangeMesh& mesh);

/// <F_i| d^2/dr^2 + 1/(4 r^2) |F_j>, closed form, RegSqrt with alpha = 0.
OperatorMatrix combined_2d_matrix(const LagrangeMesh& mesh);

/// <F_i| V(h r) |F_j> with V in problem units; the result is already scaled.
OperatorMatrix potential_matrix(const LagrangeMesh& mesh, const PotentialSpec& v, Mode mode);

enum class OracleOperator { Overlap, InvR, InvR2, R, R2, DDr, D2, Combined2D };

const char* to_string(OracleOperator op);

/// Exact power beta such that F_i O F_j = polynomial * r^beta e^{-r}.
/// Throws Divergence when the integrand is not integrable at the origin.
double oracle_weight_power(const LagrangeMesh& mesh, OracleOperator op);

/// Exact <F_i|O|F_j> (unscaled) from a Gauss-Laguerre rule of order N + 10
/// with alpha' equal to the integrand's origin power.
double exact_element_oracle(const LagrangeMesh& mesh, OracleOperator op, int i, int j);

/// Whole oracle matrix with one rule.
Eigen::MatrixXd oracle_matrix(const LagrangeMesh& mesh, OracleOperator op);

enum class HamiltonianVariant { Var, RegSqrtMesh, RegRMesh, NonReg, NonRegVG };
enum class Variant2D { Var2D, RegSqrtMesh2D };

const char* to_string(HamiltonianVariant v);
const char* to_string(Variant2D v);
HamiltonianVariant variant_from_string(const std::string& name);
Variant2D variant2d_from_string(const std::string& name);

/// Family and alpha a variant works on by default.
MeshSpec default_mesh(HamiltonianVariant v, int n, double h);
MeshSpec default_mesh(Variant2D v, int n, double h);

/// Exact or Gauss per term of the 3D Hamiltonian.
struct TermModes {
  Mode kinetic;
  Mode centrifugal;
  Mode potential;
};

TermModes term_modes(HamiltonianVariant v);

struct Hamiltonian {
  OperatorMatrix H;
  OperatorMatrix S;
  /// Mesh whose functions span the basis (differs from the input mesh for Var2D).
  MeshSpec basis;
};

/// H = -(1/2h^2) D2 + l(l+1)/(2h^2) R^{-2} + V.
Hamiltonian hamiltonian_3d(const MeshSpec& mesh, int l, const PotentialSpec& v, HamiltonianVariant variant);

/// 2D radial equation with angular momentum m. RegSqrtMesh2D expects the
/// RegSqrt alpha = 0 mesh; Var2D builds N-1 RegSqrt alpha = 2 functions on
/// the same h.
Hamiltonian hamiltonian_2d(const MeshSpec& mesh, int m, const PotentialSpec& v, Variant2D variant);

enum class Dimension { ThreeD, TwoD };
enum class Singularity { Safe, AccuracyLoss };

const char* to_string(Singularity s);

/// Origin exponent e = b + (l + 1) - s - alpha (l + 1 -> m + 1/2 in 2D) of the
/// Gauss-quadrature integrand F_i [O phi] / w. Negative e means the Gauss
/// approximation of that operator loses accuracy.
Singularity classify_singularity(Family family, double alpha, int angular, int s, Dimension dim);

/// One Gauss-approximated operator of a variant and its inverse power at the origin.
struct GaussOperator {
  OperatorKind kind;
  int inverse_power;
};

/// Operators a 3D variant evaluates with the Gauss rule where that is not
/// already exact, for the given l and potential.
std::vector<GaussOperator> gauss_approximated_operators(HamiltonianVariant v, const MeshSpec& mesh, int l,
                                                        const PotentialSpec& pot);

/// Combined verdict over gauss_approximated_operators.
Singularity predict_accuracy_loss(HamiltonianVariant v, const MeshSpec& mesh, int l, const PotentialSpec& pot);

}  // namespace lagmesh
