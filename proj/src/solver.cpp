#include "lagmesh/solver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "lagmesh/error.hpp"

namespace lagmesh {

namespace {

void fix_sign(Eigen::Ref<Eigen::VectorXd> c) {
  Eigen::Index k = 0;
  const double big = c.cwiseAbs().maxCoeff(&k);
  // ties between equal-magnitude components resolve to the lowest index
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::fabs(c(i)) >= big * (1.0 - 1e-12)) {
      k = i;
      break;
    }
  }
  if (c(k) < 0) c = -c;
}

Eigen::Index first_nonzero(const Eigen::VectorXd& c) {
  const double tol = 1e-12 * c.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (std::fabs(c(i)) > tol) return i;
  return c.size();
}

}  // namespace

BoundSpectrum solve_bound_states(const OperatorMatrix& h, const OperatorMatrix& s) {
  const auto n = h.values.rows();
  require(h.values.cols() == n && s.values.rows() == n && s.values.cols() == n,
          "H and S must be square matrices of the same size");
  require(h.values.allFinite() && s.values.allFinite(), "H and S must be finite");

  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;
  if (s.values.isIdentity(0.0)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.values);
    if (es.info() != Eigen::Success) throw_error(ErrorKind::Convergence, "symmetric eigensolver failed");
    energies = es.eigenvalues();
    vectors = es.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ss(s.values, Eigen::EigenvaluesOnly);
    const double lo = ss.eigenvalues()(0);
    const double hi = ss.eigenvalues()(n - 1);
    if (!(lo > 0.0) || lo / hi < 1e-14)
      throw_error(ErrorKind::IllConditioned, "overlap matrix is not positive definite (eigenvalue ratio " +
                                                 std::to_string(lo / hi) + ")");
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(h.values, s.values);
    if (es.info() != Eigen::Success) throw_error(ErrorKind::Convergence, "generalized eigensolver failed");
    energies = es.eigenvalues();
    vectors = es.eigenvectors();
  }

  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd c = vectors.col(j);
    c /= std::sqrt(c.dot(s.values * c));
    fix_sign(c);
    vectors.col(j) = c;
  }

  // Stable order: energy, then first nonzero component for exact ties.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (energies(a) != energies(b)) return energies(a) < energies(b);
    return first_nonzero(vectors.col(a)) < first_nonzero(vectors.col(b));
  });
  BoundSpectrum out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n), h.mesh};
  for (Eigen::Index j = 0; j < n; ++j) {
    out.energies(j) = energies(order[j]);
    out.coefficients.col(j) = vectors.col(order[j]);
  }
  return out;
}

std::vector<Pseudostate> pseudostates(const BoundSpectrum& spectrum) {
  std::vector<Pseudostate> out;
  for (Eigen::Index j = 0; j < spectrum.energies.size(); ++j) {
    const double e = spectrum.energies(j);
    if (e > 0.0)
      out.push_back({static_cast<int>(j), e, std::sqrt(2.0 * e), spectrum.coefficients.col(j)});
  }
  return out;
}

double relative_error(double approx, double exact) {
  require(exact != 0.0, "relative error needs a nonzero exact energy");
  return (approx - exact) / std::fabs(exact);
}

}  // namespace lagmesh
