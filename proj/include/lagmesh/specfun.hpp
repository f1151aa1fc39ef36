#pragma once

#include <cmath>

namespace lagmesh {

struct LaguerreValue {
  double value;
  double derivative;
};

/// L_n^{(alpha)}(x) and its x-derivative by upward recurrence. The
/// derivative uses d/dx L_n^{(alpha)} = -L_{n-1}^{(alpha+1)}, so x = 0 needs
/// no special case.
LaguerreValue laguerre(int n, double alpha, double x);

namespace detail {

template <class T>
T laguerre_value(int n, T alpha, T x) {
  if (n <= 0) return T(1);
  T prev = T(1);
  T cur = T(1) + alpha - x;
  for (int k = 1; k < n; ++k) {
    const T next = ((T(2 * k + 1) + alpha - x) * cur - (T(k) + alpha) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
T laguerre_derivative(int n, T alpha, T x) {
  if (n <= 0) return T(0);
  return -laguerre_value<T>(n - 1, alpha + T(1), x);
}

}  // namespace detail

/// Regular/irregular Coulomb functions and their x-derivatives.
struct CoulombPair {
  double F;
  double Fprime;
  double G;
  double Gprime;

  double wronskian() const { return Fprime * G - F * Gprime; }
};

/// Coulomb wave functions F_l(eta, x), G_l(eta, x) for x > 0, |eta| <= 50,
/// 0 <= l <= 20.
///
/// Steed's method (CF1 for F'/F, CF2 for (G' + iF')/(G + iF), Wronskian
/// normalization) is used outside the turning point. Inside it, G and G' are
/// carried inward from the turning point by Taylor steps of the Coulomb
/// equation (G dominates inward, so this is stable) and F follows from CF1
/// and the Wronskian at the target point.
CoulombPair coulomb_wave(int l, double eta, double x);

/// F_l(0, x) = x j_l(x), G_l(0, x) = -x y_l(x) with derivatives.
CoulombPair riccati_bessel(int l, double x);

/// Coulomb normalization C_l(eta) = 2^l e^{-pi eta / 2} |Gamma(l+1+i eta)| / (2l+1)!.
double coulomb_normalization(int l, double eta);

/// F_l'/F_l from the l-continued fraction (CF1).
double coulomb_log_derivative(int l, double eta, double x);

/// G_l(eta, k r) * (1 - e^{-gamma r})^{l+1}. Zero at r = 0.
double regularized_G(int l, double eta, double k, double gamma, double r);

double erf(double x);

}  // namespace lagmesh
