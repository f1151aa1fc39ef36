#include <doctest.h>

#include <cmath>

#include "lagmesh/experiment.hpp"

using namespace lagmesh;

namespace {

ExperimentConfig bound_config(const std::string& potential, const std::string& variant, int n, double h, int l = 0) {
  ExperimentConfig c;
  c.mode = RunMode::Bound;
  c.potential = potential;
  c.variant = variant;
  c.n = n;
  c.h = h;
  c.angular = l;
  return c;
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("bracket notation") {
    CHECK(bracket_notation(0.0685) == "6.9[-2]");
    CHECK(bracket_notation(-2.8e-7) == "-2.8[-7]");
    CHECK(bracket_notation(4.4e-13) == "4.4[-13]");
    CHECK(bracket_notation(3.2) == "3.2");
    CHECK(bracket_notation(0.0) == "0");
  }

  TEST_CASE("config validation names the field") {
    auto message = [](ExperimentConfig c) {
      try {
        c.validate();
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
        return std::string(e.what());
      }
      return std::string();
    };
    ExperimentConfig c;
    CHECK(message(c).empty());
    c.n = 0;
    CHECK(message(c).find("N:") != std::string::npos);
    c = {};
    c.h = -1.0;
    CHECK(message(c).find("h:") != std::string::npos);
    c = {};
    c.angular = 20;
    CHECK(message(c).find("l:") != std::string::npos);
    c = {};
    c.dim = 4;
    CHECK(message(c).find("dim:") != std::string::npos);
    c = {};
    c.gamma_grid = {1, 2, 3};
    CHECK(message(c).find("gamma grid:") != std::string::npos);
    c = {};
    c.mode = RunMode::Reproduce;
    c.table = 7;
    CHECK(message(c).find("table:") != std::string::npos);
  }

  TEST_CASE("config json round trip") {
    ExperimentConfig c = bound_config("coulomb", "reg-r", 12, 0.7, 1);
    c.gamma = 2.5;
    c.branch = PhaseBranch::ZeroTo180;
    c.format = OutputFormat::Json;
    const auto j = to_json(c);
    const auto back = config_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(config_hash(back) == config_hash(c));
    c.h = 0.71;
    CHECK(config_hash(back) != config_hash(c));
    CHECK_THROWS_AS(config_from_json({{"N", "ten"}}), Error);
  }

  TEST_CASE("bound run") {
    const auto r = run(bound_config("harmonic", "var", 20, 0.09));
    REQUIRE(r.rows.size() == 5);
    CHECK(r.columns == std::vector<std::string>{"state", "energy", "exact", "rel_error"});
    CHECK(std::fabs(r.rows[0][1].get<double>() - 1.5) <= 1.5e-10);
    CHECK(r.rows[1][2].get<double>() == 3.5);
    CHECK(r.build_id == build_id());
  }

  TEST_CASE("2D bound run") {
    auto c = bound_config("coulomb", "reg-sqrt", 10, 0.9, 1);
    c.dim = 2;
    const auto r = run(c);
    CHECK(std::fabs(r.rows[0][3].get<double>()) <= 1e-12);
  }

  TEST_CASE("reports are byte-identical across runs") {
    auto c = bound_config("eckart", "reg-sqrt", 15, 0.1);
    c.mode = RunMode::Scatter;
    for (auto format : {OutputFormat::Csv, OutputFormat::Json}) {
      CHECK(render(run(c), format) == render(run(c), format));
    }
    const auto j = nlohmann::json::parse(render_json(run(c)));
    CHECK(j.at("schema").get<int>() == 1);
    CHECK(j.at("provenance").at("configHash").get<std::string>() == config_hash(c));
    const std::string csv = render_csv(run(c));
    CHECK(csv.rfind("# ", 0) == 0);
    CHECK(csv.find("state,energy,k,tan_delta,delta_deg") != std::string::npos);
  }

  TEST_CASE("N sweep gains orders of magnitude") {
    const auto r = sweep(bound_config("coulomb", "var", 10, 0.9), SweepParameter::N, {10, 15});
    REQUIRE(r.rows.size() == 2);
    const double e10 = std::fabs(r.rows[0][3].get<double>());
    const double e15 = std::fabs(r.rows[1][3].get<double>());
    CHECK((e15 <= 1e-3 * e10 || e15 <= 1e-13));
    CHECK_THROWS_AS(sweep(bound_config("coulomb", "var", 10, 0.9), SweepParameter::N, {10.5}), Error);
  }

  TEST_CASE("h sweep and gamma sweep") {
    const auto r = sweep(bound_config("harmonic", "reg-sqrt", 20, 0.1), SweepParameter::H, {0.05, 0.09, 0.2});
    REQUIRE(r.rows.size() == 3);
    CHECK(r.columns[0] == "h");
    CHECK(r.rows[1][0].get<double>() == 0.09);
    auto c = bound_config("eckart", "reg-sqrt", 15, 0.1);
    c.mode = RunMode::Scatter;
    const auto g = sweep(c, SweepParameter::Gamma, {3.0, 4.0, 5.0});
    REQUIRE(g.rows.size() == 3);
    CHECK(std::fabs(g.rows[1][3].get<double>() - -49.67024) <= 1e-3);
    CHECK_THROWS_AS(sweep(bound_config("eckart", "reg-sqrt", 15, 0.1), SweepParameter::Gamma, {4.0}), Error);
    CHECK_THROWS_AS(sweep_parameter_from_string("alpha"), Error);
  }

  TEST_CASE("gamma scan run") {
    auto c = bound_config("eckart", "reg-sqrt", 15, 0.1);
    c.mode = RunMode::GammaScan;
    const auto r = run(c);
    CHECK(r.rows.size() == 16);
    CHECK(r.summary.at("plateau").get<bool>());
  }

  TEST_CASE("analytic energies") {
    CHECK(*analytic_energy(harmonic(), 3, 0, 0) == 1.5);
    CHECK(*analytic_energy(harmonic(), 2, 1, 0) == 2.0);
    CHECK(*analytic_energy(coulomb(), 3, 2, 0) == doctest::Approx(-1.0 / 18.0));
    CHECK(*analytic_energy(coulomb(), 2, 1, 0) == doctest::Approx(-2.0 / 9.0));
    CHECK_FALSE(analytic_energy(eckart(), 3, 0, 0).has_value());
  }

  TEST_CASE("reproduce shapes") {
    ExperimentConfig c;
    c.mode = RunMode::Reproduce;
    c.table = 2;
    const auto t2 = run(c);
    REQUIRE(t2.rows.size() == 3);
    CHECK(t2.columns.size() == 6);
    CHECK(t2.rows[0][4].get<std::string>() == "6.9[-2]");
    c.table = 5;
    const auto t5 = run(c);
    CHECK(t5.rows.size() == 2);
    c.table = 3;
    CHECK(run(c).rows.size() == 6);
    c.table = 4;
    CHECK(run(c).rows.size() == 8);
  }
}
