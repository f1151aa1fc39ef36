#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lagmesh {

/// c * r^p * exp(-a r^2 - b r)
struct PotentialTerm {
  double c = 0.0;
  double p = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// (q / r) * erf(mu r)
struct CoulombErfTerm {
  double q = 0.0;
  double mu = 1.0;
};

/// -4 b^2 beta e^{-2br} / (1 + beta e^{-2br})^2 with beta = (b - c)/(b + c).
struct EckartTerm {
  double b = 2.0;
  double c = -1.0;

  double beta() const { return (b - c) / (b + c); }
};

/// Central potential in internal units (hbar = M = 1). Physical problems in
/// other units carry the conversion in energy_scale: E_phys = energy_scale * E.
struct PotentialSpec {
  std::string label;
  std::vector<PotentialTerm> terms;
  std::optional<CoulombErfTerm> coulomb_erf;
  std::optional<EckartTerm> eckart;
  /// Coulomb tail V_C = tail_z / r.
  double tail_z = 0.0;
  double energy_scale = 1.0;
  std::string energy_unit;
  /// Confining potentials have no continuum, so the Coulomb-tail condition
  /// does not apply to them.
  bool confining = false;

  /// True when the potential is a finite sum of bare powers c r^p with
  /// integer p in [-2, 2].
  bool is_power_sum() const;
};

double evaluate(const PotentialSpec& spec, double r);

/// Strongest inverse power of r at the origin (0 for potentials finite at 0).
int origin_inverse_power(const PotentialSpec& spec);

PotentialSpec harmonic();
PotentialSpec coulomb(double z = -1.0);
PotentialSpec eckart(double b = 2.0, double c = -1.0);
/// alpha + alpha potential in scaled units: lengths in fm, energies divided by
/// hbar^2/M = 20.736 MeV fm^2.
PotentialSpec buck_alpha_alpha();

inline constexpr double kAlphaAlphaHbar2OverM = 20.736;  // MeV fm^2
inline constexpr double kElementaryCharge2 = 1.44;        // MeV fm

/// Builtin by name: "harmonic", "coulomb[:Z]", "eckart[:b,c]",
/// "alpha-alpha" (alias "buck_alpha_alpha").
PotentialSpec builtin(const std::string& name);

/// r^2 V(r) -> 0 at the origin, probed at r = 1e-6.
bool satisfies_origin_condition(const PotentialSpec& spec);

/// r^2 [V(r) - Z/r] -> 0 at large r, probed at r = 100 * length_scale.
/// Confining potentials pass vacuously.
bool satisfies_tail_condition(const PotentialSpec& spec, double length_scale = 1.0);

}  // namespace lagmesh
