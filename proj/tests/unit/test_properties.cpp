#include <doctest.h>

#include <cmath>
#include <random>

#include "lagmesh/scattering.hpp"
#include "lagmesh/specfun.hpp"

using namespace lagmesh;

namespace {

constexpr std::uint64_t kSeed = 0x5eed1234;

std::uniform_int_distribution<int> ints(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi); }
std::uniform_real_distribution<double> reals(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi); }

const HamiltonianVariant kVariants[] = {HamiltonianVariant::Var, HamiltonianVariant::RegSqrtMesh,
                                        HamiltonianVariant::RegRMesh, HamiltonianVariant::NonReg,
                                        HamiltonianVariant::NonRegVG};

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("gauss overlap is the identity") {
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = ints(1, 40)(rng);
      const auto family = static_cast<Family>(ints(0, 2)(rng));
      const LagrangeMesh mesh(MeshSpec{n, reals(0.0, 3.0)(rng), family, reals(0.05, 2.0)(rng)});
      CHECK(overlap_matrix(mesh, Mode::Gauss).values == Eigen::MatrixXd::Identity(n, n));
    }
  }

  TEST_CASE("hamiltonians are symmetric") {
    std::mt19937_64 rng(kSeed + 1);
    const PotentialSpec pots[] = {harmonic(), coulomb(), eckart(), buck_alpha_alpha()};
    for (int trial = 0; trial < 40; ++trial) {
      const auto v = kVariants[ints(0, 4)(rng)];
      const int n = ints(3, 25)(rng);
      const int l = ints(0, 2)(rng);
      const auto& pot = pots[ints(0, 3)(rng)];
      const auto ham = hamiltonian_3d(default_mesh(v, n, reals(0.05, 1.0)(rng)), l, pot, v);
      const Eigen::MatrixXd& h = ham.H.values;
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * h.cwiseAbs().maxCoeff());
    }
  }

  TEST_CASE("regularized alpha = 1 kinetic is exact at the gauss approximation") {
    std::mt19937_64 rng(kSeed + 2);
    for (int trial = 0; trial < 20; ++trial) {
      const LagrangeMesh mesh(MeshSpec{ints(1, 50)(rng), 1.0, Family::RegSqrt, 1.0});
      const Eigen::MatrixXd d = kinetic_matrix(mesh, Mode::Exact).values - kinetic_matrix(mesh, Mode::Gauss).values;
      CHECK(d.cwiseAbs().maxCoeff() <= 1e-14);
    }
  }

  TEST_CASE("tan delta does not depend on the state normalization") {
    std::mt19937_64 rng(kSeed + 3);
    const auto v = eckart();
    const MeshSpec mesh = default_mesh(HamiltonianVariant::RegSqrtMesh, 15, 0.1);
    const auto ps = pseudostates(solve_bound_states(hamiltonian_3d(mesh, 0, v, HamiltonianVariant::RegSqrtMesh)));
    for (int trial = 0; trial < 20; ++trial) {
      const auto& state = ps[ints(0, static_cast<int>(ps.size()) - 1)(rng)];
      Pseudostate scaled = state;
      const double factor = (ints(0, 1)(rng) ? 1.0 : -1.0) * std::pow(10.0, reals(-3.0, 3.0)(rng));
      scaled.coefficients *= factor;
      const double gamma = reals(0.5, 8.0)(rng);
      const double a = tan_delta(state, mesh, 0, v, 0.0, gamma).tan_delta;
      const double b = tan_delta(scaled, mesh, 0, v, 0.0, gamma).tan_delta;
      CHECK(std::fabs(a - b) <= 1e-13 * std::max(1.0, std::fabs(a)));
    }
  }

  TEST_CASE("Coulomb Wronskian") {
    std::mt19937_64 rng(kSeed + 4);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int l = ints(0, 20)(rng);
      const double eta = reals(-50.0, 50.0)(rng);
      const double x = std::pow(10.0, reals(-2.0, 2.5)(rng));
      const auto c = coulomb_wave(l, eta, x);
      if (!std::isfinite(c.G) || std::fabs(c.G) > 1e150 || std::fabs(c.F) < 1e-150) continue;
      INFO("l=" << l << " eta=" << eta << " x=" << x);
      CHECK(std::fabs(c.wronskian() - 1.0) <= 1e-10);
      ++checked;
    }
    CHECK(checked > 200);
  }

  TEST_CASE("variational energies are upper bounds") {
    std::mt19937_64 rng(kSeed + 5);
    for (int trial = 0; trial < 30; ++trial) {
      const bool ho = ints(0, 1)(rng);
      const int l = ints(0, 3)(rng);
      const int n = ints(l + 2, 30)(rng);
      const double h = ho ? reals(0.05, 0.3)(rng) : reals(0.2, 1.5)(rng);
      const auto pot = ho ? harmonic() : coulomb();
      const auto s = solve_bound_states(hamiltonian_3d(default_mesh(HamiltonianVariant::Var, n, h), l, pot, HamiltonianVariant::Var));
      for (int k = 0; k < std::min(3, n); ++k) {
        const auto exact = ho ? 2.0 * k + l + 1.5 : -0.5 / ((k + l + 1.0) * (k + l + 1.0));
        INFO("ho=" << ho << " l=" << l << " N=" << n << " h=" << h << " k=" << k);
        CHECK(relative_error(s.energies(k), exact) >= -1e-12);
      }
    }
  }

  TEST_CASE("variational eigenvalues interlace under N -> N+1") {
    std::mt19937_64 rng(kSeed + 6);
    for (int trial = 0; trial < 20; ++trial) {
      const int l = ints(0, 2)(rng);
      const int n = ints(l + 2, 25)(rng);
      const double h = reals(0.1, 1.0)(rng);
      const auto pot = ints(0, 1)(rng) ? harmonic() : eckart();
      auto solve = [&](int size) {
        return solve_bound_states(hamiltonian_3d(default_mesh(HamiltonianVariant::Var, size, h), l, pot, HamiltonianVariant::Var))
            .energies;
      };
      const Eigen::VectorXd a = solve(n), b = solve(n + 1);
      for (int k = 0; k < n; ++k) {
        const double tol = 1e-10 * std::max(1.0, std::fabs(a(k)));
        CHECK(b(k) <= a(k) + tol);
        CHECK(a(k) <= b(k + 1) + tol);
      }
    }
  }
}
