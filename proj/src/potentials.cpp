#include "lagmesh/potentials.hpp"

#include <cmath>
#include <sstream>

#include "lagmesh/error.hpp"
#include "lagmesh/specfun.hpp"

namespace lagmesh {

bool PotentialSpec::is_power_sum() const {
  if (coulomb_erf || eckart) return false;
  for (const auto& t : terms) {
    if (t.a != 0.0 || t.b != 0.0) return false;
    if (t.p != std::round(t.p) || t.p < -2.0 || t.p > 2.0) return false;
  }
  return true;
}

double evaluate(const PotentialSpec& spec, double r) {
  require(r > 0.0, "potential evaluation needs r > 0, got " + std::to_string(r));
  double v = 0.0;
  for (const auto& t : spec.terms) {
    double term = t.c;
    if (t.p != 0.0) term *= std::pow(r, t.p);
    if (t.a != 0.0 || t.b != 0.0) term *= std::exp(-t.a * r * r - t.b * r);
    v += term;
  }
  if (spec.coulomb_erf) v += spec.coulomb_erf->q / r * lagmesh::erf(spec.coulomb_erf->mu * r);
  if (spec.eckart) {
    const double b = spec.eckart->b;
    const double beta = spec.eckart->beta();
    const double e = std::exp(-2.0 * b * r);
    const double den = 1.0 + beta * e;
    v += -4.0 * b * b * beta * e / (den * den);
  }
  return v;
}

int origin_inverse_power(const PotentialSpec& spec) {
  int s = 0;
  for (const auto& t : spec.terms) {
    if (t.c != 0.0 && t.p < 0.0) s = std::max(s, static_cast<int>(std::ceil(-t.p)));
  }
  return s;
}

PotentialSpec harmonic() {
  PotentialSpec v;
  v.label = "harmonic";
  v.terms = {{0.5, 2.0, 0.0, 0.0}};
  v.confining = true;
  return v;
}

PotentialSpec coulomb(double z) {
  PotentialSpec v;
  v.label = "coulomb";
  v.terms = {{z, -1.0, 0.0, 0.0}};
  v.tail_z = z;
  return v;
}

PotentialSpec eckart(double b, double c) {
  require(b + c != 0.0, "Eckart potential needs b + c != 0");
  require(b > 0.0, "Eckart potential needs b > 0");
  PotentialSpec v;
  v.label = "eckart";
  v.eckart = EckartTerm{b, c};
  return v;
}

PotentialSpec buck_alpha_alpha() {
  PotentialSpec v;
  v.label = "alpha-alpha";
  v.terms = {{-122.6225 / kAlphaAlphaHbar2OverM, 0.0, 0.22, 0.0}};
  const double z = 4.0 * kElementaryCharge2 / kAlphaAlphaHbar2OverM;
  v.coulomb_erf = CoulombErfTerm{z, 0.75};
  v.tail_z = z;
  v.energy_scale = kAlphaAlphaHbar2OverM;
  v.energy_unit = "MeV";
  return v;
}

namespace {

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      require(used == item.size(), "bad potential parameter '" + item + "'");
    } catch (const std::logic_error&) {
      throw_error(ErrorKind::InvalidArgument, "bad potential parameter '" + item + "'");
    }
  }
  return out;
}

}  // namespace

PotentialSpec builtin(const std::string& name) {
  const auto colon = name.find(':');
  const std::string base = name.substr(0, colon);
  const std::vector<double> params =
      colon == std::string::npos ? std::vector<double>{} : parse_params(name.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    require(params.empty() || params.size() == count,
            "potential '" + base + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (base == "harmonic") {
    expect(0);
    return harmonic();
  }
  if (base == "coulomb") {
    expect(1);
    return params.empty() ? coulomb() : coulomb(params[0]);
  }
  if (base == "eckart") {
    expect(2);
    return params.empty() ? eckart() : eckart(params[0], params[1]);
  }
  if (base == "alpha-alpha" || base == "buck_alpha_alpha") {
    expect(0);
    return buck_alpha_alpha();
  }
  throw_error(ErrorKind::InvalidArgument, "unknown potential '" + name + "'");
}

bool satisfies_origin_condition(const PotentialSpec& spec) {
  const double r0 = 1e-6;
  const double scale = std::max(1.0, std::fabs(evaluate(spec, 1.0)));
  return std::fabs(r0 * r0 * evaluate(spec, r0)) <= 1e-3 * scale;
}

bool satisfies_tail_condition(const PotentialSpec& spec, double length_scale) {
  if (spec.confining) return true;
  const double r = 100.0 * length_scale;
  return std::fabs(r * r * (evaluate(spec, r) - spec.tail_z / r)) <= 1e-6;
}

}  // namespace lagmesh
