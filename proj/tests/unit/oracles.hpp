#pragma once

// Independent reference evaluations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracles {

/// Adaptive Simpson on [a, b], run over unit-width panels. The local
/// tolerance never drops below the roundoff of the panel estimate.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int depth = 30) {
  struct Rec {
    static double run(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                      double whole, double tol, int depth) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6 * (fa + 4 * flm + fm);
      const double right = (b - m) / 6 * (fm + 4 * frm + fb);
      const double floor = 1e-15 * (b - a) * (std::fabs(fa) + std::fabs(fm) + std::fabs(fb));
      if (depth <= 0 || std::fabs(left + right - whole) <= 15 * std::max(tol, floor))
        return left + right + (left + right - whole) / 15;
      return run(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) + run(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
    }
  };
  const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
  const double width = (b - a) / panels;
  double sum = 0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * width, hi = lo + width;
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    sum += Rec::run(f, lo, hi, fa, fm, fb, width / 6 * (fa + 4 * fm + fb), tol / panels, depth);
  }
  return sum;
}

/// L_n^{(alpha)}(x) = sum_k (-1)^k binom(n + alpha, n - k) x^k / k!.
inline double laguerre_series(int n, double alpha, double x) {
  // binom(n + alpha, n) as a product, then term_{k+1} / term_k = -x (n - k) / ((k + 1)(k + 1 + alpha))
  long double term = 1;
  for (int j = 1; j <= n; ++j) term *= (j + (long double)alpha) / j;
  long double sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    term *= -(long double)x * (n - k) / ((k + 1) * (k + 1 + (long double)alpha));
  }
  return (double)sum;
}

/// erf by its Maclaurin series (fine for |x| <= 3).
inline double erf_series(double x) {
  long double sum = 0, term = x;
  for (int n = 0; n < 200; ++n) {
    sum += term / (2 * n + 1);
    term *= -(long double)x * x / (n + 1);
  }
  return (double)(2 / std::sqrt(std::numbers::pi_v<long double>) * sum);
}

/// arg Gamma(l + 1 + i eta) from Stirling's series after an upward shift.
inline long double coulomb_phase(int l, double eta) {
  using C = std::complex<long double>;
  C z(l + 1.0L, eta);
  C shift = 0;
  while (z.real() < 30) {
    shift += std::log(z);
    z += 1.0L;
  }
  const C lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::numbers::pi_v<long double>) + 1.0L / (12.0L * z) -
               1.0L / (360.0L * z * z * z) + 1.0L / (1260.0L * std::pow(z, 5));
  return (lg - shift).imag();
}

struct FG {
  double F, Fp, G, Gp;
};

/// Asymptotic expansion of F and G (valid for rho >> l, eta).
inline FG coulomb_asymptotic(int l, double eta, long double rho) {
  long double fk = 1, gk = 0, fs = 0, gs = 0, fps = 0, gps = 0;
  long double fpk = 0, gpk = 1 - eta / rho;
  for (int k = 0; k < 400; ++k) {
    fs += fk;
    gs += gk;
    fps += fpk;
    gps += gpk;
    const long double a = (2 * k + 1) * eta / ((2 * k + 2) * rho);
    const long double b = (l * (l + 1) - k * (k + 1) + (long double)eta * eta) / ((2 * k + 2) * rho);
    const long double nf = a * fk - b * gk, ng = a * gk + b * fk;
    const long double nfp = a * fpk - b * gpk - nf / rho, ngp = a * gpk + b * fpk - ng / rho;
    fk = nf;
    gk = ng;
    fpk = nfp;
    gpk = ngp;
    if (k > 5 && std::fabs(fk) + std::fabs(gk) + std::fabs(fpk) + std::fabs(gpk) < 1e-24L) break;
  }
  const long double theta = rho - eta * std::log(2 * rho) - l * std::numbers::pi_v<long double> / 2 + coulomb_phase(l, eta);
  const long double c = std::cos(theta), s = std::sin(theta);
  return {(double)(gs * c + fs * s), (double)(gps * c + fps * s), (double)(fs * c - gs * s), (double)(fps * c - gps * s)};
}

/// Integrates u'' = (l(l+1)/rho^2 + 2 eta/rho - 1) u with RK4 in long double.
inline void coulomb_rk4(int l, double eta, long double x0, long double x1, long double& u, long double& du, int steps) {
  const long double hstep = (x1 - x0) / steps;
  auto acc = [&](long double x, long double y) { return (l * (l + 1) / (x * x) + 2 * eta / x - 1) * y; };
  long double x = x0;
  for (int i = 0; i < steps; ++i) {
    const long double k1y = du, k1v = acc(x, u);
    const long double k2y = du + hstep / 2 * k1v, k2v = acc(x + hstep / 2, u + hstep / 2 * k1y);
    const long double k3y = du + hstep / 2 * k2v, k3v = acc(x + hstep / 2, u + hstep / 2 * k2y);
    const long double k4y = du + hstep * k3v, k4v = acc(x + hstep, u + hstep * k3y);
    u += hstep / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    du += hstep / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    x += hstep;
  }
}

/// F and G at rho from the asymptotic expansion at rho_far, carried inward by RK4.
inline FG coulomb_asymptotic_rk4(int l, double eta, double rho, double rho_far = 80.0, int steps = 200000) {
  const FG far = coulomb_asymptotic(l, eta, rho_far);
  long double f = far.F, fp = far.Fp, g = far.G, gp = far.Gp;
  coulomb_rk4(l, eta, rho_far, rho, f, fp, steps);
  coulomb_rk4(l, eta, rho_far, rho, g, gp, steps);
  return {(double)f, (double)fp, (double)g, (double)gp};
}

/// Regular F_l by its power series about the origin,
/// F = C_l rho^{l+1} sum_k A_k rho^{k-l-1}.
inline double coulomb_f_series(int l, double eta, double rho) {
  // C_l from |Gamma(l+1+i eta)| via the same Stirling shift
  using C = std::complex<long double>;
  C z(l + 1.0L, eta);
  C shift = 0;
  while (z.real() < 30) {
    shift += std::log(z);
    z += 1.0L;
  }
  const C lg = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::numbers::pi_v<long double>) + 1.0L / (12.0L * z) -
               1.0L / (360.0L * z * z * z) + 1.0L / (1260.0L * std::pow(z, 5)) - shift;
  const long double log_c = l * std::log(2.0L) - std::numbers::pi_v<long double> * eta / 2 + lg.real() -
                            std::lgamma(2.0L * l + 2);
  long double a_prev = 0, a = 1, sum = 1, pw = 1, last = 1;
  for (int k = l + 2; k < l + 400; ++k) {
    const long double next = (2 * eta * a - a_prev) / ((long double)(k + l) * (k - l - 1));
    a_prev = a;
    a = next;
    pw *= rho;
    const long double term = a * pw;
    sum += term;
    // odd terms vanish for eta = 0, so look at two in a row
    if (k > l + 20 && std::fabs(term) + std::fabs(last) < 1e-25L * std::fabs(sum)) break;
    last = term;
  }
  return (double)(std::exp(log_c) * std::pow((long double)rho, l + 1) * sum);
}

}  // namespace oracles
