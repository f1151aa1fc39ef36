#include "lagmesh/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lagmesh/error.hpp"

namespace lagmesh {

LaguerreValue laguerre(int n, double alpha, double x) {
  return {detail::laguerre_value<double>(n, alpha, x),
          detail::laguerre_derivative<double>(n, alpha, x)};
}

double erf(double x) { return std::erf(x); }

double coulomb_normalization(int l, double eta) {
  require(l >= 0, "Coulomb normalization needs l >= 0");
  double log_c = 0.0;
  if (eta != 0.0) {
    const double t = 2.0 * std::numbers::pi * eta;
    log_c = 0.5 * std::log(t / std::expm1(t));
  }
  for (int s = 1; s <= l; ++s) log_c += std::log(2.0) + 0.5 * std::log(s * s + eta * eta);
  log_c -= std::lgamma(2.0 * l + 2.0);
  return std::exp(log_c);
}

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;

struct Cf1Result {
  double ratio;  // F'/F
  int sign;      // sign of F_l
};

// F_L'/F_L = S_{L+1} - R_{L+1}^2 / (S_{L+1} + S_{L+2} - R_{L+2}^2 / (...)),
// S_L = L/x + eta/L, R_L^2 = 1 + eta^2/L^2. The tails of the fraction are
// F_{L+k-1}/F_{L+k} up to positive factors, so counting negative tails gives
// the sign of F_L relative to F at large L (which is positive).
Cf1Result coulomb_cf1(int l, double eta, double x) {
  auto s_of = [&](double L) { return L / x + eta / L; };
  auto r2_of = [&](double L) { return 1.0 + eta * eta / (L * L); };

  // Lentz pass only determines a safe depth.
  double f = s_of(l + 1.0);
  if (f == 0.0) f = kTiny;
  double c = f;
  double d = 0.0;
  const int max_terms = 200000 + 4 * static_cast<int>(x);
  int k = 1;
  for (; k < max_terms; ++k) {
    const double a = -r2_of(l + k);
    const double b = s_of(l + k) + s_of(l + k + 1.0);
    d = b + a * d;
    if (d == 0.0) d = kTiny;
    c = b + a / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < kEps && k > 2) break;
  }
  if (k >= max_terms)
    throw_error(ErrorKind::Convergence, "Coulomb CF1 did not converge (l = " + std::to_string(l) +
                                            ", eta = " + std::to_string(eta) +
                                            ", x = " + std::to_string(x) + ")");

  const int depth = k + 30;
  double tail = s_of(l + depth) + s_of(l + depth + 1.0);
  int sign = 1;
  for (int j = depth - 1; j >= 1; --j) {
    tail = s_of(l + j) + s_of(l + j + 1.0) - r2_of(l + j + 1.0) / tail;
    if (tail == 0.0) tail = kTiny;
    if (tail < 0.0) sign = -sign;
  }
  return {s_of(l + 1.0) - r2_of(l + 1.0) / tail, sign};
}

struct Cf2Result {
  double p;
  double q;
};

// Steed's CF2 for p + iq = (G' + iF') / (G + iF).
Cf2Result coulomb_cf2(int l, double eta, double x) {
  const double xi = 1.0 / x;
  const double wi = 2.0 * eta;
  double pk = 0.0;
  double p = 0.0;
  double q = 1.0 - eta * xi;
  double ar = -(eta * eta + l * (l + 1.0));
  double ai = eta;
  const double br = 2.0 * (x - eta);
  double bi = 2.0;
  double dr = br / (br * br + bi * bi);
  double di = -bi / (br * br + bi * bi);
  double dp = -xi * (ar * di + ai * dr);
  double dq = xi * (ar * dr - ai * di);
  const int max_terms = 2000000;
  for (int it = 0; it < max_terms; ++it) {
    p += dp;
    q += dq;
    pk += 2.0;
    ar += pk;
    ai += wi;
    bi += 2.0;
    double dd = ar * dr - ai * di + br;
    di = ai * dr + ar * di + bi;
    const double cc = 1.0 / (dd * dd + di * di);
    dr = cc * dd;
    di = -cc * di;
    const double a = br * dr - bi * di - 1.0;
    const double b = bi * dr + br * di;
    const double tmp = dp * a - dq * b;
    dq = dp * b + dq * a;
    dp = tmp;
    if (std::fabs(dp) + std::fabs(dq) < (std::fabs(p) + std::fabs(q)) * kEps) return {p, q};
  }
  throw_error(ErrorKind::Convergence, "Coulomb CF2 did not converge (l = " + std::to_string(l) +
                                          ", eta = " + std::to_string(eta) +
                                          ", x = " + std::to_string(x) + ")");
}

CoulombPair steed(int l, double eta, double x) {
  const Cf1Result cf1 = coulomb_cf1(l, eta, x);
  const Cf2Result cf2 = coulomb_cf2(l, eta, x);
  if (!(cf2.q > 0.0))
    throw_error(ErrorKind::Convergence, "Coulomb CF2 returned non-positive q at x = " +
                                            std::to_string(x));
  const double gam = (cf1.ratio - cf2.p) / cf2.q;
  const double w = 1.0 / std::sqrt((cf1.ratio - cf2.p) * gam + cf2.q);
  const double F = cf1.sign * w;
  return {F, F * cf1.ratio, F * gam, F * (cf2.p * gam - cf2.q)};
}

// Carries a solution (u, u') of u'' = (L/x^2 + 2 eta/x - 1) u from x0 down to
// x1 < x0 with Taylor steps; the recurrence follows from multiplying the
// equation by x^2. Terms are kept pre-multiplied by t^n.
void taylor_inward(int l, double eta, double x0, double x1, double& u, double& up) {
  const double ll = l * (l + 1.0);
  while (x0 > x1) {
    const double kappa2 = ll / (x0 * x0) + 2.0 * eta / x0 - 1.0;
    const double kappa = std::sqrt(std::max(std::fabs(kappa2), 1.0));
    const double max_step = std::min(0.4 * x0, 3.0 / kappa);
    const double t = std::max(x1 - x0, -max_step);

    const double c0 = ll + 2.0 * eta * x0 - x0 * x0;
    const double c1 = 2.0 * eta - 2.0 * x0;
    const double x02 = x0 * x0;
    double bm2 = 0.0, bm1 = 0.0;  // b_{n-2}, b_{n-1}
    double b0 = u, b1 = up * t;   // b_n, b_{n+1}
    double sum = b0 + b1;
    double dsum = b1;  // sum of n b_n
    int quiet = 0;
    for (int n = 0; n < 400; ++n) {
      const double b2 = ((c0 - n * (n - 1.0)) * b0 * t * t + c1 * bm1 * t * t * t -
                         bm2 * t * t * t * t - 2.0 * x0 * (n + 1.0) * n * b1 * t) /
                        (x02 * (n + 2.0) * (n + 1.0));
      sum += b2;
      dsum += (n + 2.0) * b2;
      bm2 = bm1;
      bm1 = b0;
      b0 = b1;
      b1 = b2;
      const double scale = std::fabs(sum) + std::fabs(dsum);
      quiet = (std::fabs(b2) * (n + 3.0) <= 1e-18 * scale) ? quiet + 1 : 0;
      if (quiet >= 3) break;
      if (n == 399)
        throw_error(ErrorKind::Convergence, "Coulomb Taylor continuation did not converge");
    }
    u = sum;
    up = dsum / t;
    x0 += t;
    if (x0 - x1 < 1e-15 * x1) x0 = x1;
  }
}

double turning_point(int l, double eta) {
  const double ll = l * (l + 1.0);
  const double root = std::sqrt(eta * eta + ll);
  if (eta >= 0.0) return eta + root;
  return root > 0.0 ? ll / (root - eta) : 0.0;
}

}  // namespace

double coulomb_log_derivative(int l, double eta, double x) {
  require(l >= 0, "Coulomb functions need l >= 0");
  require(x > 0.0, "Coulomb functions need x > 0");
  return coulomb_cf1(l, eta, x).ratio;
}

CoulombPair coulomb_wave(int l, double eta, double x) {
  require(l >= 0, "Coulomb functions need l >= 0, got " + std::to_string(l));
  require(std::isfinite(eta), "Coulomb eta must be finite");
  require(std::isfinite(x) && x > 0.0, "Coulomb functions need x > 0, got " + std::to_string(x));

  const double x_match = 1.2 * turning_point(l, eta) + 2.0;
  if (x >= x_match || (l == 0 && eta == 0.0)) return steed(l, eta, x);

  const CoulombPair at_match = steed(l, eta, x_match);
  double g = at_match.G;
  double gp = at_match.Gprime;
  taylor_inward(l, eta, x_match, x, g, gp);
  const double ratio = coulomb_cf1(l, eta, x).ratio;
  const double F = 1.0 / (ratio * g - gp);
  return {F, F * ratio, g, gp};
}

CoulombPair riccati_bessel(int l, double x) {
  require(l >= 0, "Riccati-Bessel functions need l >= 0");
  require(x > 0.0, "Riccati-Bessel functions need x > 0");
  if (l == 0) return {std::sin(x), std::cos(x), std::cos(x), -std::sin(x)};
  const unsigned ul = static_cast<unsigned>(l);
  const double j = std::sph_bessel(ul, x);
  const double jm = std::sph_bessel(ul - 1, x);
  const double y = std::sph_neumann(ul, x);
  const double ym = std::sph_neumann(ul - 1, x);
  return {x * j, x * jm - l * j, -x * y, -(x * ym - l * y)};
}

double regularized_G(int l, double eta, double k, double gamma, double r) {
  require(gamma > 0.0, "regularization gamma must be > 0, got " + std::to_string(gamma));
  require(k > 0.0, "wave number must be > 0");
  require(r >= 0.0, "radius must be >= 0");
  if (r == 0.0) return 0.0;
  if (r < 1e-8 / gamma) {
    // G_l(eta, x) ~ x^{-l} / ((2l+1) C_l(eta)) and 1 - e^{-gamma r} ~ gamma r
    const double x = k * r;
    const double g_lead = std::pow(x, -l) / ((2.0 * l + 1.0) * coulomb_normalization(l, eta));
    return std::pow(gamma * r, l + 1) * g_lead;
  }
  const double damp = -std::expm1(-gamma * r);
  return coulomb_wave(l, eta, k * r).G * std::pow(damp, l + 1);
}

}  // namespace lagmesh
