#pragma once

// First-order wave equations, their dispersion structure, conjugate-pair
// factorizations of the second-order operator, and the classical
// energy-momentum product identity.
//
// A first-order operator has the shape
//     T (1/c) d/dt + g grad + M,
// where T is the identity, xi times spatial inversion, or the
// pseudoscalar-inversion composition; g = +/-1; and the mass operator M is
// xi (mc/hbar) R, (mc/hbar) E R, or a plain scalar (mc/hbar), each with
// either sign.  Applying the conjugate operator reproduces the second-order
// scalar polynomial on every component, with an overall minus sign for the
// variants that carry the time factor.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "octon/algebra.hpp"
#include "octon/eigen.hpp"
#include "octon/errors.hpp"
#include "octon/operators.hpp"
#include "octon/planewave.hpp"

namespace octon {

enum class TimeFactor : std::uint8_t { Identity, XiInversion, PseudoInversion };
enum class MassOperatorKind : std::uint8_t { XiInversion, PseudoInversion, Scalar };

struct FirstOrderSpec {
  TimeFactor time_factor = TimeFactor::Identity;
  int gradient_sign = +1;
  MassOperatorKind mass_kind = MassOperatorKind::XiInversion;
  int mass_sign = +1;

  bool operator==(const FirstOrderSpec&) const = default;
};

/// The ten named variants: a1..a4 use the xi-inversion mass operator with
/// the four gradient/mass sign choices, b1..b4 the pseudoscalar-inversion
/// mass operator, and c1/c2 move the inversion-type operator onto the time
/// derivative leaving a plain scalar mass.
inline const std::vector<std::pair<std::string, FirstOrderSpec>>& first_order_variants() {
  static const std::vector<std::pair<std::string, FirstOrderSpec>> v = {
      {"a1", {TimeFactor::Identity, +1, MassOperatorKind::XiInversion, +1}},
      {"a2", {TimeFactor::Identity, +1, MassOperatorKind::XiInversion, -1}},
      {"a3", {TimeFactor::Identity, -1, MassOperatorKind::XiInversion, +1}},
      {"a4", {TimeFactor::Identity, -1, MassOperatorKind::XiInversion, -1}},
      {"b1", {TimeFactor::Identity, +1, MassOperatorKind::PseudoInversion, +1}},
      {"b2", {TimeFactor::Identity, +1, MassOperatorKind::PseudoInversion, -1}},
      {"b3", {TimeFactor::Identity, -1, MassOperatorKind::PseudoInversion, +1}},
      {"b4", {TimeFactor::Identity, -1, MassOperatorKind::PseudoInversion, -1}},
      {"c1", {TimeFactor::XiInversion, +1, MassOperatorKind::Scalar, -1}},
      {"c2", {TimeFactor::PseudoInversion, +1, MassOperatorKind::Scalar, +1}},
  };
  return v;
}

/// The eight sign/mass variants with identity time factor.
inline std::vector<std::pair<std::string, FirstOrderSpec>> canonical_eight_variants() {
  const auto& all = first_order_variants();
  return {all.begin(), all.begin() + 8};
}

inline FirstOrderSpec variant_by_name(const std::string& name) {
  for (const auto& [n, spec] : first_order_variants()) {
    if (n == name) return spec;
  }
  throw Error("unknown first-order variant: " + name);
}

inline OctonOperator time_factor_operator(TimeFactor t) {
  switch (t) {
    case TimeFactor::Identity:
      return OctonOperator::identity();
    case TimeFactor::XiInversion:
      return xi * inversion_operator();
    case TimeFactor::PseudoInversion:
      return compose(left_multiplication_operator(BasisElement::E), inversion_operator());
  }
  return OctonOperator::identity();
}

inline OctonOperator mass_operator(const FirstOrderSpec& spec, const PhysicalConstants& k) {
  const double mc_over_hbar = k.m * k.c / k.hbar;
  const Complex sign(static_cast<double>(spec.mass_sign), 0.0);
  switch (spec.mass_kind) {
    case MassOperatorKind::XiInversion:
      return (sign * xi * mc_over_hbar) * inversion_operator();
    case MassOperatorKind::PseudoInversion:
      return (sign * mc_over_hbar) *
             compose(left_multiplication_operator(BasisElement::E), inversion_operator());
    case MassOperatorKind::Scalar:
      return (sign * mc_over_hbar) * OctonOperator::identity();
  }
  return OctonOperator::zero();
}

/// The conjugate spec: composing conjugate(spec) after spec yields the
/// second-order polynomial (times kg_polynomial_sign(spec)).
inline FirstOrderSpec conjugate_spec(const FirstOrderSpec& spec) {
  FirstOrderSpec out = spec;
  if (spec.time_factor == TimeFactor::Identity) {
    out.gradient_sign = -spec.gradient_sign;
  }
  out.mass_sign = -spec.mass_sign;
  return out;
}

/// +1 when conjugate . spec reproduces the second-order polynomial, -1 when
/// it reproduces its negative (the time-factor variants).
inline int kg_polynomial_sign(const FirstOrderSpec& spec) {
  return spec.time_factor == TimeFactor::Identity ? +1 : -1;
}

/// The 8x8 matrix of the first-order operator on plane-wave amplitudes.
inline OctonOperator first_order_matrix(const FirstOrderSpec& spec, double energy,
                                        const Real3& momentum, const PhysicalConstants& k) {
  const Complex time_term = -xi * energy / (k.hbar * k.c);
  const OctonOperator t_op = time_factor_operator(spec.time_factor);
  const OctonOperator grad =
      left_multiplication_operator((xi / k.hbar) * momentum_octon(momentum));
  const double g = static_cast<double>(spec.gradient_sign);
  return time_term * t_op + g * grad + mass_operator(spec, k);
}

/// The first-order operator applied to a plane-wave state (the residual
/// amplitude; zero exactly when the state solves the equation).
inline Octon apply_first_order(const FirstOrderSpec& spec, const PlaneWaveState& s,
                               const PhysicalConstants& k) {
  return apply(first_order_matrix(spec, s.energy, s.momentum, k), s.amplitude);
}

/// The scalar second-order polynomial (-E^2 + p^2 c^2)/(hbar c)^2
/// + (mc/hbar)^2; zero exactly on shell.
inline double kg_polynomial(double energy, const Real3& momentum, const PhysicalConstants& k) {
  const double hc = k.hbar * k.c;
  return (-energy * energy + momentum_squared(momentum) * k.c * k.c) / (hc * hc) +
         std::pow(k.m * k.c / k.hbar, 2);
}

/// Residual of the second-order equation on a plane-wave state.
inline Octon kg_residual(const PlaneWaveState& s, const PhysicalConstants& k) {
  return kg_polynomial(s.energy, s.momentum, k) * s.amplitude;
}

/// Residual of the conjugate-pair factorization: left applied after right,
/// minus the signed scalar polynomial; identically zero for every state.
/// Throws NotConjugatePair unless left == conjugate_spec(right).
inline Octon factorization_residual(const FirstOrderSpec& left, const FirstOrderSpec& right,
                                    const PlaneWaveState& s, const PhysicalConstants& k) {
  if (left != conjugate_spec(right)) {
    throw NotConjugatePair("left spec is not the conjugate of the right spec");
  }
  const OctonOperator mr = first_order_matrix(right, s.energy, s.momentum, k);
  const OctonOperator ml = first_order_matrix(left, s.energy, s.momentum, k);
  const Octon product = apply(ml, apply(mr, s.amplitude));
  const double sign = static_cast<double>(kg_polynomial_sign(right));
  return product - sign * kg_polynomial(s.energy, s.momentum, k) * s.amplitude;
}

inline Eigen::Matrix<Complex, 8, 8> first_order_matrix_eigen(const FirstOrderSpec& spec,
                                                             double energy, const Real3& momentum,
                                                             const PhysicalConstants& k) {
  return to_eigen(first_order_matrix(spec, energy, momentum, k));
}

inline Complex first_order_determinant(const FirstOrderSpec& spec, double energy,
                                       const Real3& momentum, const PhysicalConstants& k) {
  return first_order_matrix_eigen(spec, energy, momentum, k).determinant();
}

/// Nullspace dimension by singular values below `threshold` relative to the
/// largest one.
inline int nullspace_dimension(const FirstOrderSpec& spec, double energy, const Real3& momentum,
                               const PhysicalConstants& k, double threshold = 1e-8) {
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 8, 8>> svd(
      first_order_matrix_eigen(spec, energy, momentum, k));
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv(0), 1e-300);
  int dim = 0;
  for (int s = 0; s < 8; ++s) {
    if (sv(s) < threshold * scale) ++dim;
  }
  return dim;
}

/// Orthonormal basis of the nullspace at (energy, momentum).
inline std::vector<Octon> nullspace_basis(const FirstOrderSpec& spec, double energy,
                                          const Real3& momentum, const PhysicalConstants& k,
                                          double threshold = 1e-8) {
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 8, 8>> svd(
      first_order_matrix_eigen(spec, energy, momentum, k), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv(0), 1e-300);
  std::vector<Octon> basis;
  for (int s = 0; s < 8; ++s) {
    if (sv(s) < threshold * scale) basis.push_back(from_eigen(svd.matrixV().col(s)));
  }
  return basis;
}

struct DispersionRoot {
  double energy;
  int multiplicity;
};

/// The analytic roots E = +/- sqrt(p^2 c^2 + m^2 c^4) with their verified
/// nullspace dimensions.
inline std::vector<DispersionRoot> dispersion_roots(const FirstOrderSpec& spec,
                                                    const Real3& momentum,
                                                    const PhysicalConstants& k,
                                                    double threshold = 1e-8) {
  const double root = on_shell_energy(momentum, k);
  std::vector<DispersionRoot> out;
  out.push_back({root, nullspace_dimension(spec, root, momentum, k, threshold)});
  out.push_back({-root, nullspace_dimension(spec, -root, momentum, k, threshold)});
  return out;
}

/// Symbolic coefficient matrices of the first-order operator: the factors of
/// (1/c d/dt), (d/dx, d/dy, d/dz) and (mc/hbar).  Used to compare the
/// componentwise scalar system generated from the algebra against listed
/// forms and against first_order_matrix.
struct FirstOrderSymbols {
  OctonOperator time;
  std::array<OctonOperator, 3> gradient;
  OctonOperator mass;  // normalized by mc/hbar
};

inline FirstOrderSymbols first_order_symbols(const FirstOrderSpec& spec) {
  FirstOrderSymbols sym;
  sym.time = time_factor_operator(spec.time_factor);
  const double g = static_cast<double>(spec.gradient_sign);
  sym.gradient = {g * left_multiplication_operator(BasisElement::i),
                  g * left_multiplication_operator(BasisElement::j),
                  g * left_multiplication_operator(BasisElement::k)};
  PhysicalConstants unit;
  unit.m = 1.0;
  sym.mass = mass_operator(spec, unit);
  return sym;
}

/// Octonic product identity for the classical energy-momentum relation in a
/// potential: (u + v)(u - v) with scalar u = E - e phi and polar
/// v = pc - eA collapses to the scalar u^2 - |v|^2; the residual octon is
/// identically zero for real inputs.
inline Octon einstein_identity_residual(double energy, const Real3& momentum, double phi,
                                        const Real3& vector_potential,
                                        const PhysicalConstants& k) {
  const Complex u(energy - k.e * phi, 0.0);
  Real3 v;
  for (int d = 0; d < 3; ++d) v[d] = momentum[d] * k.c - k.e * vector_potential[d];
  const Octon left = Octon::scalar(u) + momentum_octon(v);
  const Octon right = Octon::scalar(u) - momentum_octon(v);
  const Complex scalar_form = u * u - Complex(momentum_squared(v), 0.0);
  return multiply(left, right) - Octon::scalar(scalar_form);
}

}  // namespace octon
