#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/representations.hpp"

using namespace octon;

namespace {
const std::array<Complex, 4> kDefaultAlpha = {Complex(1, 0), Complex{}, Complex{}, Complex{}};
}

TEST_CASE("spinor basis at default parameters reproduces the printed pair") {
  const RepresentationBasis rep = spinor_basis(kDefaultAlpha);
  CHECK(rep.basis[0] == Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K));
  CHECK(rep.basis[1] == Octon::unit(BasisElement::I) - xi * Octon::unit(BasisElement::J));
}

TEST_CASE("axial operators act as the 2x2 spin matrices on any spinor basis") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<Complex, 4> alpha;
    for (auto& v : alpha) v = Complex(d(rng), d(rng));
    alpha[0] += Complex(1.0, 0);
    const RepresentationBasis rep = spinor_basis(alpha);
    CHECK((matrix_of(left_multiplication_operator(BasisElement::K), rep) -
           rep_matrices::pauli_z())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((matrix_of(left_multiplication_operator(BasisElement::I), rep) -
           rep_matrices::pauli_x())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((matrix_of(left_multiplication_operator(BasisElement::J), rep) -
           rep_matrices::pauli_y())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("polar operators have no matrix form on a generic spinor basis") {
  const RepresentationBasis rep = spinor_basis(kDefaultAlpha);
  CHECK_THROWS_AS(matrix_of(left_multiplication_operator(BasisElement::i), rep), NotClosed);
  CHECK((matrix_of(OctonOperator::identity(), rep) - RepMatrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("bispinor matrices match the frozen 4x4 families") {
  const RepresentationBasis rep = bispinor_basis(Complex(1, 0), Complex(1, 0));
  CHECK((matrix_of(inversion_operator(), rep) - rep_matrices::beta()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::E), rep) -
         rep_matrices::pseudoscalar_ediag())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::K), rep) -
         rep_matrices::spin_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::j), rep) -
         rep_matrices::velocity_y())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("degenerate bispinor coefficients are rejected") {
  CHECK_THROWS_AS(bispinor_basis(Complex{}, Complex{}), DegenerateBasis);
  CHECK_THROWS_AS(octospinor_basis(Complex{}), DegenerateBasis);
}

TEST_CASE("the standard representation diagonalizes axial-z and inversion") {
  const RepresentationBasis rep =
      bispinor_basis(Complex(1, 0), Complex(1, 0), BispinorRep::Standard);
  CHECK((matrix_of(inversion_operator(), rep) - rep_matrices::standard_inversion())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::K), rep) -
         rep_matrices::standard_axial_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::i), rep) -
         rep_matrices::standard_polar_x())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::E), rep) -
         rep_matrices::standard_pseudoscalar())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("the octospinor basis diagonalizes the three commuting operators") {
  const RepresentationBasis rep = octospinor_basis(Complex(4, 0));
  CHECK(rep.basis[0] == Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K) +
                            Octon::unit(BasisElement::E) + Octon::unit(BasisElement::k));
  CHECK((matrix_of(left_multiplication_operator(BasisElement::K), rep) -
         rep_matrices::octospinor_axial_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(left_multiplication_operator(BasisElement::E), rep) -
         rep_matrices::octospinor_pseudoscalar())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(discrete_symmetry_operator(DiscreteSymmetry::PiZ), rep) -
         rep_matrices::octospinor_turn_z())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((matrix_of(inversion_operator(), rep) - rep_matrices::octospinor_inversion())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("gamma operators satisfy the metric anticommutation and pseudoscalar identity") {
  CHECK(max_abs_diff(dirac_gamma(5), left_multiplication_operator(BasisElement::E)) == 0.0);
  CHECK(max_abs_diff(compose(dirac_gamma(0), dirac_gamma(0)), OctonOperator::identity()) == 0.0);
  CHECK((compose(dirac_gamma(1), dirac_gamma(2)) + compose(dirac_gamma(2), dirac_gamma(1)))
            .max_norm() == 0.0);
  CHECK(max_abs_diff(compose(dirac_gamma(1), dirac_gamma(1)), -OctonOperator::identity()) ==
        0.0);
  CHECK_THROWS_AS(dirac_gamma(4), Error);
}

TEST_CASE("the matrix waveform is linear and multiplicative") {
  CHECK((matrix_waveform(Octon::unit(BasisElement::One)) - Matrix4cd::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  Matrix4cd diag_k = Matrix4cd::Zero();
  diag_k(0, 0) = 1;
  diag_k(1, 1) = -1;
  diag_k(2, 2) = 1;
  diag_k(3, 3) = -1;
  CHECK((matrix_waveform(Octon::unit(BasisElement::K)) - diag_k).cwiseAbs().maxCoeff() == 0.0);
  CHECK(matrix_waveform(Octon::zero()).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int s = 0; s < 20; ++s) {
    Octon a, b;
    for (int t = 0; t < 8; ++t) {
      a[t] = Complex(d(rng), d(rng));
      b[t] = Complex(d(rng), d(rng));
    }
    CHECK((matrix_waveform(multiply(a, b)) - matrix_waveform(a) * matrix_waveform(b))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
  }
}

TEST_CASE("representation matrices do not depend on the free parameters") {
  const RepresentationBasis a = bispinor_basis(Complex(1, 0), Complex(1, 0));
  const RepresentationBasis b = bispinor_basis(Complex(0.3, -0.7), Complex(1.2, 0.4));
  for (auto e : {BasisElement::i, BasisElement::K, BasisElement::E}) {
    const RepMatrix ma = matrix_of(left_multiplication_operator(e), a);
    const RepMatrix mb = matrix_of(left_multiplication_operator(e), b);
    CHECK((ma - mb).cwiseAbs().maxCoeff() < 1e-12);
  }
}
