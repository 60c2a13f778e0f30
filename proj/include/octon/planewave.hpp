#pragma once

// Plane-wave calculus: states of the form amplitude * exp{xi/hbar (-Et + p.r)},
// under which time differentiation becomes multiplication by -xi E/hbar and
// the gradient becomes left multiplication by (xi/hbar) times the momentum
// octon.  All wave-equation identities evaluated on such states are exact
// algebra.

#include <array>
#include <cmath>
#include <cstdint>

#include "octon/algebra.hpp"
#include "octon/errors.hpp"
#include "octon/operators.hpp"

namespace octon {

using Real3 = std::array<double, 3>;

struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double m = 1.0;
  double e = -1.0;  // charge; negative for the electron
};

struct PlaneWaveState {
  double energy = 0.0;
  Real3 momentum = {0.0, 0.0, 0.0};
  Octon amplitude;
};

inline double momentum_squared(const Real3& p) {
  return p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
}

inline double on_shell_energy(const Real3& p, const PhysicalConstants& k) {
  return std::sqrt(momentum_squared(p) * k.c * k.c + k.m * k.m * std::pow(k.c, 4));
}

/// d/dt on the plane wave: multiplication by -xi E / hbar.
inline Complex time_derivative_factor(const PlaneWaveState& s, const PhysicalConstants& k) {
  return -xi * s.energy / k.hbar;
}

/// The momentum as a polar octon p_x i + p_y j + p_z k.
inline Octon momentum_octon(const Real3& p) { return Octon::polar(p[0], p[1], p[2]); }

/// The gradient on the plane wave: left multiplication by (xi/hbar) p.
inline Octon gradient_octon(const PlaneWaveState& s, const PhysicalConstants& k) {
  return (xi / k.hbar) * momentum_octon(s.momentum);
}

/// External potentials as seen by the plane-wave backend.  Only constant
/// potentials keep plane waves as eigenstates; anything else must go through
/// the grid backend.
struct Potentials {
  enum class Kind : std::uint8_t { None, Constant, LinearX };
  Kind kind = Kind::None;
  double phi = 0.0;
  Real3 vector_potential = {0.0, 0.0, 0.0};
  double field_strength = 0.0;  // LinearX: A_y = field_strength * x

  static Potentials none() { return {}; }

  static Potentials constant(double phi, const Real3& a) {
    Potentials p;
    p.kind = Kind::Constant;
    p.phi = phi;
    p.vector_potential = a;
    return p;
  }

  /// Homogeneous magnetic field B along z in the gauge A_y = B x.
  static Potentials homogeneous_field_gauge(double b) {
    Potentials p;
    p.kind = Kind::LinearX;
    p.field_strength = b;
    return p;
  }

  bool is_constant() const { return kind == Kind::None || kind == Kind::Constant; }
};

inline void require_constant(const Potentials& p) {
  if (!p.is_constant()) {
    throw NonConstantPotential("plane-wave backend requires constant potentials");
  }
}

/// Energy and momentum shifted by constant potentials:
/// E -> E - e phi, p -> p - (e/c) A.
inline PlaneWaveState shifted_state(const PlaneWaveState& s, const PhysicalConstants& k,
                                    const Potentials& pot) {
  require_constant(pot);
  PlaneWaveState out = s;
  out.energy = s.energy - k.e * pot.phi;
  for (int d = 0; d < 3; ++d) {
    out.momentum[d] = s.momentum[d] - (k.e / k.c) * pot.vector_potential[d];
  }
  return out;
}

}  // namespace octon
