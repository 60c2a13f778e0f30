#pragma once

// Eigenstructure of octon operators: numeric decomposition of the 8x8
// matrices, the canonical printed eigenbases of the basis operators, and the
// closed idempotent algebra generated by the axial-K eigenfunctions.

#include <algorithm>
#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "octon/algebra.hpp"
#include "octon/errors.hpp"
#include "octon/operators.hpp"

namespace octon {

using Matrix8cd = Eigen::Matrix<Complex, 8, 8>;
using Vector8cd = Eigen::Matrix<Complex, 8, 1>;

inline Matrix8cd to_eigen(const OctonOperator& op) {
  Matrix8cd m;
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) m(s, t) = op(s, t);
  return m;
}

inline Vector8cd to_eigen(const Octon& x) {
  Vector8cd v;
  for (int s = 0; s < 8; ++s) v(s) = x[s];
  return v;
}

inline Octon from_eigen(const Vector8cd& v) {
  Octon r;
  for (int s = 0; s < 8; ++s) r[s] = v(s);
  return r;
}

struct EigenPair {
  Complex eigenvalue;
  int multiplicity = 0;
  std::vector<Octon> basis;  // unit-norm, spanning the eigenspace
};

struct EigenSystem {
  std::vector<EigenPair> pairs;  // sorted by (re, im) of the eigenvalue

  int total_multiplicity() const {
    int n = 0;
    for (const auto& p : pairs) n += p.multiplicity;
    return n;
  }
};

/// Dense eigendecomposition of an operator.  Eigenvalues within
/// `cluster_tol` of each other are merged into one degenerate pair.
/// Throws NonDiagonalizable if the eigenvectors do not span all eight
/// dimensions.
inline EigenSystem eigen_decompose(const OctonOperator& op, double cluster_tol = 1e-8,
                                   double residual_tol = 1e-10) {
  Eigen::ComplexEigenSolver<Matrix8cd> solver(to_eigen(op), /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NonDiagonalizable("eigen solver failed to converge");
  }
  const Matrix8cd vecs = solver.eigenvectors();
  // Rank check of the eigenvector matrix.
  Eigen::JacobiSVD<Matrix8cd> svd(vecs);
  const auto& sv = svd.singularValues();
  if (sv(7) < 1e-8 * sv(0)) {
    throw NonDiagonalizable("eigenspaces have deficient rank");
  }

  std::array<int, 8> order = {0, 1, 2, 3, 4, 5, 6, 7};
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return vals(a).imag() < vals(b).imag();
  });

  EigenSystem sys;
  for (int idx : order) {
    const Complex lambda = vals(idx);
    Vector8cd v = vecs.col(idx);
    v.normalize();
    const double residual = (to_eigen(op) * v - lambda * v).cwiseAbs().maxCoeff();
    if (residual > residual_tol) {
      throw NonDiagonalizable("eigenpair residual above tolerance");
    }
    if (!sys.pairs.empty() && std::abs(sys.pairs.back().eigenvalue - lambda) <= cluster_tol) {
      sys.pairs.back().multiplicity += 1;
      sys.pairs.back().basis.push_back(from_eigen(v));
    } else {
      EigenPair p;
      p.eigenvalue = lambda;
      p.multiplicity = 1;
      p.basis.push_back(from_eigen(v));
      sys.pairs.push_back(std::move(p));
    }
  }
  return sys;
}

/// Residual of membership of x in the span of `basis` (least squares).
inline double subspace_residual(const Octon& x, const std::vector<Octon>& basis) {
  Eigen::MatrixXcd b(8, static_cast<int>(basis.size()));
  for (int c = 0; c < static_cast<int>(basis.size()); ++c) b.col(c) = to_eigen(basis[c]);
  const Vector8cd y = to_eigen(x);
  const Eigen::VectorXcd coeff = b.colPivHouseholderQr().solve(y);
  return (b * coeff - y).cwiseAbs().maxCoeff();
}

/// Operators with a printed canonical eigenbasis: the seven basis operators,
/// spatial inversion, and the discrete turn about z.
enum class EigenOperatorKind : std::uint8_t {
  BasisI,
  BasisJ,
  BasisK,
  BasisE,
  BasisAxialI,
  BasisAxialJ,
  BasisAxialK,
  Inversion,
  TurnZ,
};

inline OctonOperator operator_of(EigenOperatorKind kind) {
  switch (kind) {
    case EigenOperatorKind::BasisI:
      return left_multiplication_operator(BasisElement::i);
    case EigenOperatorKind::BasisJ:
      return left_multiplication_operator(BasisElement::j);
    case EigenOperatorKind::BasisK:
      return left_multiplication_operator(BasisElement::k);
    case EigenOperatorKind::BasisE:
      return left_multiplication_operator(BasisElement::E);
    case EigenOperatorKind::BasisAxialI:
      return left_multiplication_operator(BasisElement::I);
    case EigenOperatorKind::BasisAxialJ:
      return left_multiplication_operator(BasisElement::J);
    case EigenOperatorKind::BasisAxialK:
      return left_multiplication_operator(BasisElement::K);
    case EigenOperatorKind::Inversion:
      return inversion_operator();
    case EigenOperatorKind::TurnZ:
      return discrete_symmetry_operator(DiscreteSymmetry::PiZ);
  }
  return OctonOperator::identity();
}

inline constexpr std::array<EigenOperatorKind, 9> kAllEigenOperators = {
    EigenOperatorKind::BasisI,      EigenOperatorKind::BasisJ,
    EigenOperatorKind::BasisK,      EigenOperatorKind::BasisE,
    EigenOperatorKind::BasisAxialI, EigenOperatorKind::BasisAxialJ,
    EigenOperatorKind::BasisAxialK, EigenOperatorKind::Inversion,
    EigenOperatorKind::TurnZ};

inline constexpr const char* eigen_operator_label(EigenOperatorKind k) {
  constexpr const char* labels[9] = {"i", "j", "k", "E", "I", "J", "K", "R", "pi_z"};
  return labels[static_cast<int>(k)];
}

namespace detail {

// Canonical eigenfunction patterns for the basis operators: each entry is
// (first element, second element, xi factor on second); the eigenfunction is
// unit(first) + lambda * factor * unit(second).
struct EigenbasisEntry {
  BasisElement first;
  BasisElement second;
  bool with_xi;
};

inline constexpr std::array<std::array<EigenbasisEntry, 4>, 7> kCanonicalEigenbasis = {{
    // i
    {{{BasisElement::One, BasisElement::i, false},
      {BasisElement::j, BasisElement::K, true},
      {BasisElement::E, BasisElement::I, false},
      {BasisElement::J, BasisElement::k, true}}},
    // j
    {{{BasisElement::One, BasisElement::j, false},
      {BasisElement::k, BasisElement::I, true},
      {BasisElement::E, BasisElement::J, false},
      {BasisElement::K, BasisElement::i, true}}},
    // k
    {{{BasisElement::One, BasisElement::k, false},
      {BasisElement::i, BasisElement::J, true},
      {BasisElement::E, BasisElement::K, false},
      {BasisElement::I, BasisElement::j, true}}},
    // E
    {{{BasisElement::One, BasisElement::E, false},
      {BasisElement::i, BasisElement::I, false},
      {BasisElement::j, BasisElement::J, false},
      {BasisElement::k, BasisElement::K, false}}},
    // I
    {{{BasisElement::One, BasisElement::I, false},
      {BasisElement::J, BasisElement::K, true},
      {BasisElement::E, BasisElement::i, false},
      {BasisElement::j, BasisElement::k, true}}},
    // J
    {{{BasisElement::One, BasisElement::J, false},
      {BasisElement::K, BasisElement::I, true},
      {BasisElement::E, BasisElement::j, false},
      {BasisElement::k, BasisElement::i, true}}},
    // K (ordered to match the four-term expansion used for stationary states)
    {{{BasisElement::One, BasisElement::K, false},
      {BasisElement::i, BasisElement::j, true},
      {BasisElement::E, BasisElement::k, false},
      {BasisElement::I, BasisElement::J, true}}},
}};

}  // namespace detail

/// The four canonical eigenfunctions of a basis operator (or inversion, or
/// the discrete turn about z) for eigenvalue lambda = +/-1, unnormalized
/// exactly as printed.
inline std::vector<Octon> canonical_eigenbasis(EigenOperatorKind kind, int lambda) {
  if (lambda != 1 && lambda != -1) {
    throw Error("eigenvalue must be +1 or -1");
  }
  const Complex lam(static_cast<double>(lambda), 0.0);
  std::vector<Octon> basis;
  switch (kind) {
    case EigenOperatorKind::Inversion: {
      if (lambda == 1) {
        for (auto e : {BasisElement::One, BasisElement::I, BasisElement::J, BasisElement::K})
          basis.push_back(Octon::unit(e));
      } else {
        for (auto e : {BasisElement::E, BasisElement::i, BasisElement::j, BasisElement::k})
          basis.push_back(Octon::unit(e));
      }
      return basis;
    }
    case EigenOperatorKind::TurnZ: {
      if (lambda == 1) {
        for (auto e : {BasisElement::One, BasisElement::E, BasisElement::k, BasisElement::K})
          basis.push_back(Octon::unit(e));
      } else {
        for (auto e : {BasisElement::i, BasisElement::j, BasisElement::I, BasisElement::J})
          basis.push_back(Octon::unit(e));
      }
      return basis;
    }
    default: {
      const auto& entries = detail::kCanonicalEigenbasis[static_cast<int>(kind)];
      for (const auto& entry : entries) {
        const Complex factor = entry.with_xi ? xi : Complex(1.0, 0.0);
        basis.push_back(Octon::unit(entry.first) + lam * factor * Octon::unit(entry.second));
      }
      return basis;
    }
  }
}

/// Alternative eigenbasis of the discrete turn about z built from the
/// two-element combinations; together with canonical_eigenbasis(TurnZ, .)
/// this gives eight listed eigenfunctions per sign.
inline std::vector<Octon> turn_z_combination_eigenbasis(int lambda) {
  if (lambda != 1 && lambda != -1) {
    throw Error("eigenvalue must be +1 or -1");
  }
  std::vector<Octon> basis;
  if (lambda == 1) {
    basis.push_back(Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K));
    basis.push_back(Octon::unit(BasisElement::One) - Octon::unit(BasisElement::K));
    basis.push_back(Octon::unit(BasisElement::E) + Octon::unit(BasisElement::k));
    basis.push_back(Octon::unit(BasisElement::E) - Octon::unit(BasisElement::k));
  } else {
    basis.push_back(Octon::unit(BasisElement::i) + xi * Octon::unit(BasisElement::j));
    basis.push_back(Octon::unit(BasisElement::i) - xi * Octon::unit(BasisElement::j));
    basis.push_back(Octon::unit(BasisElement::I) + xi * Octon::unit(BasisElement::J));
    basis.push_back(Octon::unit(BasisElement::I) - xi * Octon::unit(BasisElement::J));
  }
  return basis;
}

/// General eigenfunction of the axial-K operator:
///   F1 (1 + lambda K) + F2 (i + lambda xi j) + F3 (E + lambda k)
///                     + F4 (I + lambda xi J).
inline Octon general_eigenfunction(int lambda, const std::array<Complex, 4>& f) {
  if (lambda != 1 && lambda != -1) {
    throw Error("eigenvalue must be +1 or -1");
  }
  const auto basis = canonical_eigenbasis(EigenOperatorKind::BasisAxialK, lambda);
  Octon r;
  for (int s = 0; s < 4; ++s) r += f[s] * basis[s];
  return r;
}

/// The closed multiplicative table of the half-sum idempotents
/// {(1+K)/2, (1-K)/2, (I+xi J)/2, (I-xi J)/2}: expected products, with the
/// zero octon encoded as index -1.
struct IdempotentTable {
  std::array<Octon, 4> elements;
  std::array<std::array<int, 4>, 4> product_index;  // -1 = zero
};

inline IdempotentTable idempotent_table() {
  IdempotentTable t;
  const Octon one = Octon::unit(BasisElement::One);
  const Octon K = Octon::unit(BasisElement::K);
  const Octon I = Octon::unit(BasisElement::I);
  const Octon J = Octon::unit(BasisElement::J);
  t.elements = {0.5 * (one + K), 0.5 * (one - K), 0.5 * (I + xi * J), 0.5 * (I - xi * J)};
  t.product_index = {{
      {0, -1, 2, -1},
      {-1, 1, -1, 3},
      {-1, 2, -1, 0},
      {3, -1, 1, -1},
  }};
  return t;
}

}  // namespace octon
