#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "lagmesh/error.hpp"

namespace lagmesh {

/// Generalized Gauss-Laguerre rule with modified weights.
///
/// The weights absorb the weight function r^alpha e^{-r}, so that
///   integral_0^inf g(r) dr ~= sum_k weights[k] * g(nodes[k])
/// is exact whenever g is a polynomial of degree <= 2N-1 times r^alpha e^{-r}.
class QuadratureRule {
 public:
  QuadratureRule(int order, double alpha, std::vector<double> nodes, std::vector<double> weights);

  int order() const noexcept { return order_; }
  double alpha() const noexcept { return alpha_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double node(int k) const { return nodes_.at(static_cast<std::size_t>(k)); }
  double weight(int k) const { return weights_.at(static_cast<std::size_t>(k)); }

 private:
  int order_;
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Nodes are the zeros of L_N^{(alpha)}. Throws InvalidArgument for N < 1 or
/// alpha < 0 and Convergence if the root polish fails.
QuadratureRule generate_rule(int order, double alpha);

namespace detail {
[[noreturn]] void throw_nonfinite_integrand(int index, double node, double value);
}

/// Sum of weights[k] * g(nodes[k]). A non-finite g value is reported with the
/// offending node instead of being summed.
template <class Fn>
double integrate(const QuadratureRule& rule, Fn&& g) {
  double sum = 0.0;
  const auto x = rule.nodes();
  const auto w = rule.weights();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double v = g(x[k]);
    if (!std::isfinite(v)) detail::throw_nonfinite_integrand(static_cast<int>(k), x[k], v);
    sum += w[k] * v;
  }
  return sum;
}

}  // namespace lagmesh
