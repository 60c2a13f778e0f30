#pragma once

// Linear operators on octon component columns: left multiplication by basis
// elements, spatial inversion, reflections and discrete turns, projectors.
// Everything is a concrete 8x8 complex matrix, so composition is always a
// well-defined matrix product.

#include <array>
#include <cstdint>

#include "octon/algebra.hpp"

namespace octon {

class OctonOperator {
 public:
  constexpr OctonOperator() : m_{} {}

  static OctonOperator zero() { return OctonOperator{}; }

  static OctonOperator identity() {
    OctonOperator r;
    for (int s = 0; s < 8; ++s) r.m_[s][s] = Complex(1.0, 0.0);
    return r;
  }

  static OctonOperator diagonal(const std::array<Complex, 8>& d) {
    OctonOperator r;
    for (int s = 0; s < 8; ++s) r.m_[s][s] = d[s];
    return r;
  }

  Complex operator()(int row, int col) const { return m_[row][col]; }
  Complex& at(int row, int col) { return m_[row][col]; }

  OctonOperator operator+(const OctonOperator& o) const {
    OctonOperator r;
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) r.m_[s][t] = m_[s][t] + o.m_[s][t];
    return r;
  }

  OctonOperator operator-(const OctonOperator& o) const {
    OctonOperator r;
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) r.m_[s][t] = m_[s][t] - o.m_[s][t];
    return r;
  }

  OctonOperator operator-() const {
    OctonOperator r;
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) r.m_[s][t] = -m_[s][t];
    return r;
  }

  friend OctonOperator operator*(Complex a, const OctonOperator& op) {
    OctonOperator r;
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) r.m_[s][t] = a * op.m_[s][t];
    return r;
  }

  friend OctonOperator operator*(double a, const OctonOperator& op) {
    return Complex(a, 0.0) * op;
  }

  bool operator==(const OctonOperator& o) const { return m_ == o.m_; }
  bool operator!=(const OctonOperator& o) const { return !(*this == o); }

  double max_norm() const {
    double m = 0.0;
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) m = std::max(m, std::abs(m_[s][t]));
    return m;
  }

 private:
  std::array<std::array<Complex, 8>, 8> m_;
};

/// Matrix action on a component column.
inline Octon apply(const OctonOperator& op, const Octon& x) {
  Octon r;
  for (int s = 0; s < 8; ++s) {
    Complex acc{};
    for (int t = 0; t < 8; ++t) acc += op(s, t) * x[t];
    r[s] = acc;
  }
  return r;
}

inline Octon operator*(const OctonOperator& op, const Octon& x) { return apply(op, x); }

/// compose(a, b) applied to x equals a applied to (b applied to x).
inline OctonOperator compose(const OctonOperator& a, const OctonOperator& b) {
  OctonOperator r;
  for (int s = 0; s < 8; ++s) {
    for (int t = 0; t < 8; ++t) {
      Complex acc{};
      for (int u = 0; u < 8; ++u) acc += a(s, u) * b(u, t);
      r.at(s, t) = acc;
    }
  }
  return r;
}

inline OctonOperator operator*(const OctonOperator& a, const OctonOperator& b) {
  return compose(a, b);
}

inline double max_abs_diff(const OctonOperator& a, const OctonOperator& b) {
  return (a - b).max_norm();
}

/// Left multiplication by a basis element, generated from the basis product
/// table: apply(result, x) == multiply(unit(e), x) for every octon x.
inline OctonOperator left_multiplication_operator(BasisElement e) {
  OctonOperator r;
  for (int t = 0; t < 8; ++t) {
    const auto [coeff, basis] = basis_product(e, static_cast<BasisElement>(t));
    r.at(static_cast<int>(basis), t) = coeff;
  }
  return r;
}

/// Left multiplication by an arbitrary octon.
inline OctonOperator left_multiplication_operator(const Octon& a) {
  OctonOperator r;
  for (int s = 0; s < 8; ++s) {
    if (a[s] == Complex{}) continue;
    r = r + a[s] * left_multiplication_operator(static_cast<BasisElement>(s));
  }
  return r;
}

/// Spatial inversion: flips vector and pseudoscalar components, keeps scalar
/// and pseudovector components.  Acts on components only, never on arguments.
inline OctonOperator inversion_operator() {
  return OctonOperator::diagonal({Complex(1), Complex(-1), Complex(-1), Complex(-1),
                                  Complex(-1), Complex(1), Complex(1), Complex(1)});
}

enum class DiscreteSymmetry : std::uint8_t { Rx, Ry, Rz, R, PiX, PiY, PiZ, Identity };

inline constexpr std::array<DiscreteSymmetry, 7> kReflectionsAndTurns = {
    DiscreteSymmetry::Rx,  DiscreteSymmetry::Ry,  DiscreteSymmetry::Rz, DiscreteSymmetry::R,
    DiscreteSymmetry::PiX, DiscreteSymmetry::PiY, DiscreteSymmetry::PiZ};

inline constexpr const char* discrete_symmetry_label(DiscreteSymmetry s) {
  constexpr const char* labels[8] = {"Rx", "Ry", "Rz", "R", "pi_x", "pi_y", "pi_z", "id"};
  return labels[static_cast<int>(s)];
}

namespace detail {

// Sign of each basis element (canonical order) under the reflections and
// discrete turns; the scalar slot is always +1.
inline constexpr std::array<std::array<std::int8_t, 8>, 7> kDiscreteSymmetrySigns = {{
    {1, -1, 1, 1, -1, 1, -1, -1},   // Rx
    {1, 1, -1, 1, -1, -1, 1, -1},   // Ry
    {1, 1, 1, -1, -1, -1, -1, 1},   // Rz
    {1, -1, -1, -1, -1, 1, 1, 1},   // R
    {1, 1, -1, -1, 1, 1, -1, -1},   // pi_x
    {1, -1, 1, -1, 1, -1, 1, -1},   // pi_y
    {1, -1, -1, 1, 1, -1, -1, 1},   // pi_z
}};

}  // namespace detail

/// Diagonal sign operator of a reflection or discrete turn.
inline OctonOperator discrete_symmetry_operator(DiscreteSymmetry s) {
  if (s == DiscreteSymmetry::Identity) return OctonOperator::identity();
  std::array<Complex, 8> d;
  const auto& signs = detail::kDiscreteSymmetrySigns[static_cast<int>(s)];
  for (int t = 0; t < 8; ++t) d[t] = Complex(static_cast<double>(signs[t]), 0.0);
  return OctonOperator::diagonal(d);
}

enum class ProjectorKind : std::uint8_t {
  ParticlePlus,        // (1 + E-hat)/2
  ParticleMinus,       // (1 - E-hat)/2
  ParityPlus,          // (1 + R-hat)/2
  ParityMinus,         // (1 - R-hat)/2
  SpinZPlus,           // (1 + K-hat)/2
  SpinZMinus,          // (1 - K-hat)/2
  PolarizationPlus,    // (1 + pi_z)/2
  PolarizationMinus,   // (1 - pi_z)/2
};

inline constexpr std::array<ProjectorKind, 8> kAllProjectors = {
    ProjectorKind::ParticlePlus,      ProjectorKind::ParticleMinus,
    ProjectorKind::ParityPlus,        ProjectorKind::ParityMinus,
    ProjectorKind::SpinZPlus,         ProjectorKind::SpinZMinus,
    ProjectorKind::PolarizationPlus,  ProjectorKind::PolarizationMinus};

inline OctonOperator projector(ProjectorKind kind) {
  const OctonOperator id = OctonOperator::identity();
  OctonOperator base;
  double sign = 1.0;
  switch (kind) {
    case ProjectorKind::ParticlePlus:
      base = left_multiplication_operator(BasisElement::E);
      break;
    case ProjectorKind::ParticleMinus:
      base = left_multiplication_operator(BasisElement::E);
      sign = -1.0;
      break;
    case ProjectorKind::ParityPlus:
      base = inversion_operator();
      break;
    case ProjectorKind::ParityMinus:
      base = inversion_operator();
      sign = -1.0;
      break;
    case ProjectorKind::SpinZPlus:
      base = left_multiplication_operator(BasisElement::K);
      break;
    case ProjectorKind::SpinZMinus:
      base = left_multiplication_operator(BasisElement::K);
      sign = -1.0;
      break;
    case ProjectorKind::PolarizationPlus:
      base = discrete_symmetry_operator(DiscreteSymmetry::PiZ);
      break;
    case ProjectorKind::PolarizationMinus:
      base = discrete_symmetry_operator(DiscreteSymmetry::PiZ);
      sign = -1.0;
      break;
  }
  return 0.5 * (id + sign * base);
}

enum class CommutationKind : std::uint8_t { Commute, Anticommute, Neither };

/// Classifies ab -+ ba = 0 for two operators.  Sign-pattern operators give
/// exact zeros; the tolerance covers composed floating operators.
inline CommutationKind commutation_sign(const OctonOperator& a, const OctonOperator& b,
                                        double tol = 1e-12) {
  const OctonOperator ab = compose(a, b);
  const OctonOperator ba = compose(b, a);
  const double scale = std::max(1.0, std::max(ab.max_norm(), ba.max_norm()));
  if ((ab - ba).max_norm() <= tol * scale) return CommutationKind::Commute;
  if ((ab + ba).max_norm() <= tol * scale) return CommutationKind::Anticommute;
  return CommutationKind::Neither;
}

}  // namespace octon
