#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lagmesh/matelem.hpp"

namespace lagmesh {

/// Sorted eigenvalues and S-normalized eigenvectors (one per column).
struct BoundSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd coefficients;
  MeshSpec mesh;
};

/// Solves H c = E S c. S equal to the identity takes the standard path.
/// Eigenvector signs are fixed so that the largest-magnitude component is
/// positive.
BoundSpectrum solve_bound_states(const OperatorMatrix& h, const OperatorMatrix& s);

inline BoundSpectrum solve_bound_states(const Hamiltonian& ham) { return solve_bound_states(ham.H, ham.S); }

struct Pseudostate {
  int index;  ///< position in the full spectrum
  double energy;
  double k;  ///< sqrt(2E)
  Eigen::VectorXd coefficients;
};

/// Positive-energy states in ascending order.
std::vector<Pseudostate> pseudostates(const BoundSpectrum& spectrum);

/// (E_app - E_exact) / |E_exact|.
double relative_error(double approx, double exact);

}  // namespace lagmesh
