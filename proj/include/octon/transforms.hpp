#pragma once

// Continuous rotations and Lorentz boosts of octon wave functions.  The
// defining forms are sandwich products with rotor/boost octons; closed-form
// component expressions are provided as an independent evaluation path.

#include <array>
#include <cmath>

#include "octon/algebra.hpp"
#include "octon/errors.hpp"
#include "octon/representations.hpp"

namespace octon {

using Axis = std::array<double, 3>;

namespace detail {

inline void check_axis(const Axis& n, double tol = 1e-12) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(norm - 1.0) > tol) {
    throw BadAxis("axis must be a unit vector");
  }
}

inline std::array<Complex, 3> rotate_triple(const std::array<Complex, 3>& v, const Axis& n,
                                            double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex ndotv = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
  const std::array<Complex, 3> ncrossv = {n[1] * v[2] - n[2] * v[1],
                                          n[2] * v[0] - n[0] * v[2],
                                          n[0] * v[1] - n[1] * v[0]};
  std::array<Complex, 3> r;
  for (int s3 = 0; s3 < 3; ++s3) {
    r[s3] = v[s3] * c + (1.0 - c) * ndotv * n[s3] + s * ncrossv[s3];
  }
  return r;
}

}  // namespace detail

/// Rotation by `angle` about the unit axial direction `axis`.
struct Rotor {
  Axis axis;
  double angle = 0.0;
};

/// Boost with rapidity u (th u = v/c) along the unit polar direction `axis`.
struct LorentzBoost {
  Axis axis;
  double rapidity = 0.0;
};

/// The rotor octon cos(theta/2) + xi sin(theta/2) n, with n on the axial
/// basis; its complex conjugate is its inverse.
inline Octon rotor_octon(const Rotor& r) {
  detail::check_axis(r.axis);
  const double c = std::cos(0.5 * r.angle);
  const double s = std::sin(0.5 * r.angle);
  return Octon::scalar(c) + xi * s * Octon::axial(r.axis[0], r.axis[1], r.axis[2]);
}

/// The boost octon ch(u/2) - sh(u/2) n, with n on the polar basis.
inline Octon boost_octon(const LorentzBoost& b) {
  detail::check_axis(b.axis);
  const double ch = std::cosh(0.5 * b.rapidity);
  const double sh = std::sinh(0.5 * b.rapidity);
  return Octon::scalar(ch) - sh * Octon::polar(b.axis[0], b.axis[1], b.axis[2]);
}

/// Sandwich rotation conj(U) * psi * U.  Scalar and pseudoscalar grades are
/// untouched; vector and pseudovector grades rotate by `angle` about the
/// axis.
inline Octon rotate(const Octon& psi, const Rotor& r) {
  const Octon u = rotor_octon(r);
  return multiply(multiply(complex_conjugate(u), psi), u);
}

/// Closed-form rotation acting directly on the coefficient triples.
inline Octon rotate_closed_form(const Octon& psi, const Rotor& r) {
  detail::check_axis(r.axis);
  Octon out = psi;
  const auto v = detail::rotate_triple(polar_part(psi), r.axis, r.angle);
  const auto w = detail::rotate_triple(axial_part(psi), r.axis, r.angle);
  out[1] = v[0];
  out[2] = v[1];
  out[3] = v[2];
  out[5] = w[0];
  out[6] = w[1];
  out[7] = w[2];
  return out;
}

/// Sandwich boost S * psi * S (the same octon on both sides).
inline Octon boost(const Octon& psi, const LorentzBoost& b) {
  const Octon s = boost_octon(b);
  return multiply(multiply(s, psi), s);
}

/// Closed-form boost: the scalar pairs with the longitudinal vector
/// component and the pseudoscalar with the longitudinal pseudovector, each
/// mixing hyperbolically; transversal components are untouched.
inline Octon boost_closed_form(const Octon& psi, const LorentzBoost& b) {
  detail::check_axis(b.axis);
  const double ch = std::cosh(b.rapidity);
  const double sh = std::sinh(b.rapidity);
  const Axis& n = b.axis;

  const auto v = polar_part(psi);
  const auto w = axial_part(psi);
  const Complex ndotv = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
  const Complex ndotw = n[0] * w[0] + n[1] * w[1] + n[2] * w[2];

  Octon out;
  out[0] = psi[0] * ch - ndotv * sh;
  out[4] = psi[4] * ch - ndotw * sh;
  for (int s3 = 0; s3 < 3; ++s3) {
    out[1 + s3] = v[s3] - psi[0] * n[s3] * sh - (1.0 - ch) * ndotv * n[s3];
    out[5 + s3] = w[s3] - psi[4] * n[s3] * sh - (1.0 - ch) * ndotw * n[s3];
  }
  return out;
}

/// Rotation of the 4x4 matrix waveform: conjugation by the matrix of the
/// rotor octon.  Agrees with matrix_waveform(rotate(psi, r)) because the
/// waveform map is an algebra homomorphism.
inline Matrix4cd rotate_matrix_form(const Octon& psi, const Rotor& r) {
  const Octon u = rotor_octon(r);
  const Matrix4cd mu = matrix_waveform(u);
  const Matrix4cd mu_inv = matrix_waveform(complex_conjugate(u));
  return mu_inv * matrix_waveform(psi) * mu;
}

}  // namespace octon
