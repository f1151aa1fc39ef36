#include <doctest.h>

#include <cmath>

#include "lagmesh/solver.hpp"

using namespace lagmesh;

namespace {

OperatorMatrix wrap(Eigen::MatrixXd m) {
  OperatorMatrix out;
  out.values = std::move(m);
  return out;
}

BoundSpectrum solve3d(HamiltonianVariant v, int n, double h, int l, const PotentialSpec& pot) {
  return solve_bound_states(hamiltonian_3d(default_mesh(v, n, h), l, pot, v));
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("diagonal problem") {
    Eigen::MatrixXd h = Eigen::Vector3d(3.0, 1.0, 2.0).asDiagonal();
    const auto s = solve_bound_states(wrap(h), wrap(Eigen::MatrixXd::Identity(3, 3)));
    CHECK(s.energies(0) == 1.0);
    CHECK(s.energies(1) == 2.0);
    CHECK(s.energies(2) == 3.0);
    CHECK(s.coefficients.col(0).isApprox(Eigen::Vector3d(0, 1, 0)));
    CHECK(s.coefficients.col(1).isApprox(Eigen::Vector3d(0, 0, 1)));
    CHECK(s.coefficients.col(2).isApprox(Eigen::Vector3d(1, 0, 0)));
  }

  TEST_CASE("generalized problem is S-normalized") {
    Eigen::MatrixXd a(3, 3), b(3, 3);
    a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    b << 4, 1, 0, 1, 3, 0.5, 0, 0.5, 2;
    const auto s = solve_bound_states(wrap(a), wrap(b));
    const Eigen::MatrixXd gram = s.coefficients.transpose() * b * s.coefficients;
    CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
    const Eigen::MatrixXd residual = a * s.coefficients - b * s.coefficients * s.energies.asDiagonal();
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-13);
    for (int k = 1; k < 3; ++k) CHECK(s.energies(k) >= s.energies(k - 1));
    for (int k = 0; k < 3; ++k) {
      Eigen::Index at;
      s.coefficients.col(k).cwiseAbs().maxCoeff(&at);
      CHECK(s.coefficients(at, k) > 0.0);
    }
  }

  TEST_CASE("ill-conditioned overlap") {
    Eigen::MatrixXd b(2, 2);
    b << 1, 1, 1, 1;
    try {
      solve_bound_states(wrap(Eigen::MatrixXd::Identity(2, 2)), wrap(b));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IllConditioned);
    }
    CHECK_THROWS_AS(solve_bound_states(wrap(Eigen::MatrixXd::Identity(2, 2)), wrap(Eigen::MatrixXd::Identity(3, 3))), Error);
  }

  TEST_CASE("harmonic oscillator l = 1") {
    const auto s = solve3d(HamiltonianVariant::Var, 20, 0.09, 1, harmonic());
    CHECK(std::fabs(relative_error(s.energies(0), 2.5)) <= 1e-10);
    CHECK(std::fabs(relative_error(s.energies(1), 4.5)) <= 1e-10);
  }

  TEST_CASE("Coulomb l = 2 on the regularized-r mesh") {
    const auto s = solve3d(HamiltonianVariant::RegRMesh, 10, 0.9, 2, coulomb());
    const double eps = relative_error(s.energies(0), -1.0 / 18.0);
    CHECK(std::fabs(eps) >= 2.3e-6 / 2);
    CHECK(std::fabs(eps) <= 2.3e-6 * 2);
  }

  TEST_CASE("pseudostates") {
    const auto sq = pseudostates(solve3d(HamiltonianVariant::RegSqrtMesh, 15, 0.1, 0, eckart()));
    REQUIRE(!sq.empty());
    CHECK(std::fabs(sq.front().energy - 0.1982139) <= 1e-6);
    CHECK(sq.front().k == doctest::Approx(std::sqrt(2.0 * sq.front().energy)));
    const auto rr = pseudostates(solve3d(HamiltonianVariant::RegRMesh, 15, 0.1, 0, eckart()));
    CHECK(std::fabs(rr.front().energy - 0.2145073) <= 1e-6);
    const auto aa = pseudostates(solve3d(HamiltonianVariant::RegSqrtMesh, 15, 0.23, 2, buck_alpha_alpha()));
    CHECK(std::fabs(aa.front().energy * kAlphaAlphaHbar2OverM - 2.10795) <= 1e-4);
    for (std::size_t k = 1; k < sq.size(); ++k) CHECK(sq[k].energy > sq[k - 1].energy);
    for (const auto& p : sq) CHECK(p.energy > 0.0);
    // the harmonic oscillator has no continuum, but its discretized levels are all positive
    const auto ho = pseudostates(solve3d(HamiltonianVariant::Var, 6, 0.5, 0, harmonic()));
    CHECK(ho.size() == 6);
    CHECK(ho.front().index == 0);
  }

  TEST_CASE("relative error") {
    CHECK(relative_error(1.5 + 1e-10, 1.5) == doctest::Approx(6.6667e-11).epsilon(1e-4));
    CHECK(relative_error(-0.4655, -0.5) == doctest::Approx(0.069).epsilon(1e-12));
    CHECK(relative_error(-0.5, -0.5) == 0.0);
    CHECK_THROWS_AS(relative_error(1.0, 0.0), Error);
  }

  TEST_CASE("determinism") {
    const auto a = solve3d(HamiltonianVariant::NonReg, 18, 0.3, 1, coulomb());
    const auto b = solve3d(HamiltonianVariant::NonReg, 18, 0.3, 1, coulomb());
    CHECK(a.energies == b.energies);
    CHECK(a.coefficients == b.coefficients);
  }
}
