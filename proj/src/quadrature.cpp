#include "lagmesh/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "lagmesh/specfun.hpp"

namespace lagmesh {

QuadratureRule::QuadratureRule(int order, double alpha, std::vector<double> nodes,
                               std::vector<double> weights)
    : order_(order), alpha_(alpha), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  require(order_ >= 1, "quadrature order must be >= 1");
  require(nodes_.size() == static_cast<std::size_t>(order_) && weights_.size() == nodes_.size(),
          "quadrature node/weight count does not match order");
}

namespace detail {
void throw_nonfinite_integrand(int index, double node, double value) {
  throw_error(ErrorKind::Evaluation, "integrand is " + std::to_string(value) + " at node " +
                                         std::to_string(index) + " (r = " +
                                         std::to_string(node) + ")");
}
}  // namespace detail

namespace {

using ld = long double;

// Newton on L_N^{(alpha)} in extended precision. Returns false if the
// iteration wanders off.
bool polish_root(int n, ld alpha, ld& x) {
  const ld start = x;
  for (int it = 0; it < 12; ++it) {
    const ld f = detail::laguerre_value<ld>(n, alpha, x);
    const ld df = detail::laguerre_derivative<ld>(n, alpha, x);
    if (df == 0) return false;
    const ld step = f / df;
    x -= step;
    if (!std::isfinite(static_cast<double>(x)) || x <= 0) return false;
    if (std::fabs(step) <= 8 * std::numeric_limits<ld>::epsilon() * x) break;
  }
  return std::fabs(x - start) <= 1e-3L * (1 + start);
}

}  // namespace

QuadratureRule generate_rule(int order, double alpha) {
  require(order >= 1, "quadrature order must be >= 1, got " + std::to_string(order));
  require(std::isfinite(alpha) && alpha >= 0.0,
          "quadrature alpha must be >= 0, got " + std::to_string(alpha));

  // Jacobi matrix of the monic generalized Laguerre recurrence.
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw_error(ErrorKind::Convergence, "tridiagonal eigensolver failed for N = " +
                                            std::to_string(order));

  std::vector<double> nodes(order);
  std::vector<double> weights(order);
  const ld a = alpha;
  const ld log_norm = std::lgamma(static_cast<ld>(order) + a + 1) - std::lgamma(static_cast<ld>(order) + 1);
  for (int k = 0; k < order; ++k) {
    ld x = es.eigenvalues()(k);
    if (!polish_root(order, a, x))
      throw_error(ErrorKind::Convergence, "Newton polish of Laguerre root " + std::to_string(k) +
                                              " failed for N = " + std::to_string(order));
    const ld dl = detail::laguerre_derivative<ld>(order, a, x);
    // classical weight Gamma(N+a+1) / (N! x L'(x)^2), rescaled by e^x x^{-a}
    const ld log_w = log_norm - std::log(x) - 2 * std::log(std::fabs(dl)) + x - a * std::log(x);
    nodes[k] = static_cast<double>(x);
    weights[k] = static_cast<double>(std::exp(log_w));
  }
  for (int k = 1; k < order; ++k) {
    if (!(nodes[k] > nodes[k - 1]))
      throw_error(ErrorKind::Convergence,
                  "Laguerre roots not strictly increasing for N = " + std::to_string(order));
  }
  return QuadratureRule(order, alpha, std::move(nodes), std::move(weights));
}

}  // namespace lagmesh
