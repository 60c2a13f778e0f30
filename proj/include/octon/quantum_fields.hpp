#pragma once

// Quantum fields extracted from octon wave functions on plane-wave states.
// The four fields are the grade components of the first factored operator
// applied to the state (single source of truth); the componentwise formulas
// and the first-order field system are derived identities checked by the
// test suites.

#include <array>
#include <cmath>
#include <utility>

#include "octon/algebra.hpp"
#include "octon/errors.hpp"
#include "octon/planewave.hpp"
#include "octon/wave_equations.hpp"

namespace octon {

/// Scalar, polar-vector, pseudoscalar and axial-vector field amplitudes.
/// The pseudoscalar field is stored as its coefficient; reassembly
/// multiplies by the pseudoscalar unit.
struct FieldSet {
  Complex e{};
  std::array<Complex, 3> electric{};
  Complex h{};
  std::array<Complex, 3> magnetic{};

  double max_norm() const {
    double m = std::max(std::abs(e), std::abs(h));
    for (int d = 0; d < 3; ++d) {
      m = std::max(m, std::abs(electric[d]));
      m = std::max(m, std::abs(magnetic[d]));
    }
    return m;
  }
};

namespace detail {

inline FirstOrderSpec field_defining_spec() {
  return FirstOrderSpec{TimeFactor::Identity, +1, MassOperatorKind::XiInversion, +1};
}

// Split the applied-operator octon G into fields with the sign pattern that
// makes the conjugate operator application reproduce the first-order field
// system: G = e - Evec - xi h - xi ... i.e. e = G0, Evec = -Gvec,
// h = xi G_pseudoscalar, Hvec = -xi G_axial.
inline FieldSet split_fields(const Octon& g) {
  FieldSet f;
  f.e = g[0];
  f.h = xi * g[4];
  for (int d = 0; d < 3; ++d) {
    f.electric[d] = -g[1 + d];
    f.magnetic[d] = -xi * g[5 + d];
  }
  return f;
}

inline Octon reassemble_fields(const FieldSet& f) {
  Octon g;
  g[0] = f.e;
  g[4] = -xi * f.h;
  for (int d = 0; d < 3; ++d) {
    g[1 + d] = -f.electric[d];
    g[5 + d] = xi * f.magnetic[d];
  }
  return g;
}

}  // namespace detail

/// Quantum fields of a plane-wave state; with constant potentials the
/// derivative factors shift to (E - e phi, p - (e/c) A).
inline FieldSet fields_from_state(const PlaneWaveState& s, const PhysicalConstants& k,
                                  const Potentials& pot = Potentials::none()) {
  require_constant(pot);
  PlaneWaveState shifted = shifted_state(s, k, pot);
  const Octon g = apply_first_order(detail::field_defining_spec(), shifted, k);
  return detail::split_fields(g);
}

/// Residuals of the four grade equations of the first-order field system,
/// normalized as written (divergence minus its right side, curl minus its
/// right side).  All vanish exactly when the state satisfies the
/// second-order equation at the (potential-shifted) energy and momentum.
struct FieldSystemResiduals {
  Complex scalar{};
  Complex pseudoscalar{};
  std::array<Complex, 3> vector{};
  std::array<Complex, 3> pseudovector{};

  double max_norm() const {
    double m = std::max(std::abs(scalar), std::abs(pseudoscalar));
    for (int d = 0; d < 3; ++d) {
      m = std::max(m, std::abs(vector[d]));
      m = std::max(m, std::abs(pseudovector[d]));
    }
    return m;
  }
};

inline FieldSystemResiduals field_system_residual(const PlaneWaveState& s,
                                                  const PhysicalConstants& k,
                                                  const Potentials& pot = Potentials::none()) {
  require_constant(pot);
  const PlaneWaveState shifted = shifted_state(s, k, pot);
  const FirstOrderSpec right = detail::field_defining_spec();
  const Octon g = apply_first_order(right, shifted, k);
  PlaneWaveState field_state = shifted;
  field_state.amplitude = g;
  const Octon r = apply_first_order(conjugate_spec(right), field_state, k);

  FieldSystemResiduals out;
  out.scalar = r[0];
  out.pseudoscalar = xi * r[4];
  for (int d = 0; d < 3; ++d) {
    out.vector[d] = xi * r[1 + d];
    out.pseudovector[d] = r[5 + d];
  }
  return out;
}

/// The two gauge expressions whose vanishing removes the scalar and
/// pseudoscalar fields.  The scalar residual equals the scalar field e; the
/// pseudoscalar residual equals -xi times the pseudoscalar field.
inline std::pair<Complex, Complex> gauge_residual(const PlaneWaveState& s,
                                                  const PhysicalConstants& k) {
  const Complex dt = time_derivative_factor(s, k);
  const Complex grad_factor = xi / k.hbar;
  const double mass = k.m * k.c / k.hbar;
  const auto& a = s.amplitude;
  const auto& p = s.momentum;

  Complex div_polar{}, div_axial{};
  for (int d = 0; d < 3; ++d) {
    div_polar += grad_factor * p[d] * a[1 + d];
    div_axial += grad_factor * p[d] * a[5 + d];
  }
  const Complex scalar_res = dt / k.c * a[0] + div_polar + xi * mass * a[0];
  const Complex pseudo_res = dt / k.c * a[4] + div_axial - xi * mass * a[4];
  return {scalar_res, pseudo_res};
}

enum class PotentialVariant : std::uint8_t { VectorPotentials, PseudovectorPotentials };

/// A four-component potential pair sharing one plane-wave phase: a
/// scalar-type amplitude and a vector-type amplitude (polar for the vector
/// variant, axial for the pseudovector variant).
struct PotentialPair {
  double energy = 0.0;
  Real3 momentum = {0.0, 0.0, 0.0};
  Complex scalar_amp{};
  std::array<Complex, 3> vector_amp{};
};

namespace detail {

inline Octon gradient_factor_octon(const PotentialPair& p, const PhysicalConstants& k) {
  return (xi / k.hbar) * Octon::polar(p.momentum[0], p.momentum[1], p.momentum[2]);
}

inline Complex pair_time_factor(const PotentialPair& p, const PhysicalConstants& k) {
  return -xi * p.energy / k.hbar;
}

}  // namespace detail

/// Scalar gauge condition residual for a potential pair: the image of the
/// wave-function gauge condition under the potential identification,
///   (grad, v) + (xi/c) d(scalar)/dt -+ (mc/hbar) scalar = 0,
/// with the minus sign for the vector variant and plus for the pseudovector
/// variant.  A pure-gauge shift changes this residual by exactly minus the
/// second-order polynomial times the gauge amplitude, so on-shell shifts
/// preserve the gauge.
inline Complex potential_gauge_residual(const PotentialPair& p, const PhysicalConstants& k,
                                        PotentialVariant variant) {
  const Complex dt = detail::pair_time_factor(p, k);
  const Complex grad_factor = xi / k.hbar;
  const double mass = k.m * k.c / k.hbar;
  Complex div{};
  for (int d = 0; d < 3; ++d) div += grad_factor * p.momentum[d] * p.vector_amp[d];
  const double sign = variant == PotentialVariant::VectorPotentials ? -1.0 : +1.0;
  return div + (xi / k.c) * dt * p.scalar_amp + sign * mass * p.scalar_amp;
}

/// Fields built from a four-component potential pair.  For the vector
/// variant the magnetic field is the bracket of the gradient with the polar
/// potential (so its divergence equation is an identity) and the electric
/// field is defined so that its curl equation is an identity; the
/// pseudovector variant mirrors the roles.  Throws GaugeViolated when the
/// scalar gauge condition fails.
inline std::pair<std::array<Complex, 3>, std::array<Complex, 3>> fields_from_potentials(
    const PotentialPair& p, const PhysicalConstants& k, PotentialVariant variant,
    double gauge_tol = 1e-9) {
  const double scale =
      std::max({1.0, std::abs(p.scalar_amp), std::abs(p.vector_amp[0]),
                std::abs(p.vector_amp[1]), std::abs(p.vector_amp[2])});
  if (std::abs(potential_gauge_residual(p, k, variant)) > gauge_tol * scale) {
    throw GaugeViolated("potential pair violates the scalar gauge condition");
  }

  const Octon d = detail::gradient_factor_octon(p, k);
  const Complex dt = detail::pair_time_factor(p, k);
  const double mass = k.m * k.c / k.hbar;

  std::array<Complex, 3> evec, hvec;
  if (variant == PotentialVariant::VectorPotentials) {
    const Octon pol = Octon::polar(p.vector_amp[0], p.vector_amp[1], p.vector_amp[2]);
    const Octon curl = antisymmetric_product(d, pol);
    const auto grad_scalar = polar_part(p.scalar_amp * d);
    for (int c = 0; c < 3; ++c) {
      evec[c] = grad_scalar[c] - (xi / k.c) * dt * p.vector_amp[c] - mass * p.vector_amp[c];
      hvec[c] = axial_part(curl)[c];
    }
  } else {
    const Octon ax = Octon::axial(p.vector_amp[0], p.vector_amp[1], p.vector_amp[2]);
    const Octon curl = antisymmetric_product(d, ax);
    const auto grad_pseudo = axial_part(multiply(d, Octon::pseudoscalar(p.scalar_amp)));
    for (int c = 0; c < 3; ++c) {
      evec[c] = polar_part(curl)[c];
      hvec[c] = -grad_pseudo[c] + (xi / k.c) * dt * p.vector_amp[c] - mass * p.vector_amp[c];
    }
  }
  return {evec, hvec};
}

/// Pure-gauge increment generated by one plane-wave scalar amplitude
/// (sharing the pair's phase); the derived fields are unchanged.
inline PotentialPair gauge_shift(const PotentialPair& p, Complex gauge_amp,
                                 const PhysicalConstants& k,
                                 PotentialVariant variant = PotentialVariant::VectorPotentials) {
  const Octon d = detail::gradient_factor_octon(p, k);
  const Complex dt = detail::pair_time_factor(p, k);
  const double mass = k.m * k.c / k.hbar;
  PotentialPair out = p;
  const double sign = variant == PotentialVariant::VectorPotentials ? +1.0 : -1.0;
  out.scalar_amp += (xi / k.c) * dt * gauge_amp + sign * mass * gauge_amp;
  const auto grad = polar_part(gauge_amp * d);
  for (int c = 0; c < 3; ++c) out.vector_amp[c] += grad[c];
  return out;
}

// Plain componentwise differential factors for plane-wave field amplitudes,
// used to state the field equations in their written form.
inline Complex plane_divergence(double /*energy*/, const Real3& momentum,
                                const std::array<Complex, 3>& v, const PhysicalConstants& k) {
  Complex r{};
  for (int d = 0; d < 3; ++d) r += (xi / k.hbar) * momentum[d] * v[d];
  return r;
}

inline std::array<Complex, 3> plane_curl(const Real3& momentum, const std::array<Complex, 3>& v,
                                         const PhysicalConstants& k) {
  const Complex f = xi / k.hbar;
  return {f * (momentum[1] * v[2] - momentum[2] * v[1]),
          f * (momentum[2] * v[0] - momentum[0] * v[2]),
          f * (momentum[0] * v[1] - momentum[1] * v[0])};
}

inline std::array<Complex, 3> plane_time_derivative(double energy,
                                                    const std::array<Complex, 3>& v,
                                                    const PhysicalConstants& k) {
  const Complex f = -xi * energy / k.hbar;
  return {f * v[0], f * v[1], f * v[2]};
}

}  // namespace octon
