#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/eigen.hpp"
#include "octon/operators.hpp"

using namespace octon;

TEST_CASE("the axial-z operator has eigenvalues +1 and -1 of multiplicity four") {
  const EigenSystem sys = eigen_decompose(operator_of(EigenOperatorKind::BasisAxialK));
  REQUIRE(sys.pairs.size() == 2);
  CHECK(std::abs(sys.pairs[0].eigenvalue - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(sys.pairs[1].eigenvalue - Complex(1, 0)) < 1e-12);
  CHECK(sys.pairs[0].multiplicity == 4);
  CHECK(sys.pairs[1].multiplicity == 4);
  CHECK(sys.total_multiplicity() == 8);
}

TEST_CASE("inversion eigenspaces split scalar+axial against pseudoscalar+polar") {
  const EigenSystem sys = eigen_decompose(inversion_operator());
  REQUIRE(sys.pairs.size() == 2);
  const auto plus_span = canonical_eigenbasis(EigenOperatorKind::Inversion, +1);
  const auto minus_span = canonical_eigenbasis(EigenOperatorKind::Inversion, -1);
  for (const auto& v : sys.pairs[1].basis) CHECK(subspace_residual(v, plus_span) < 1e-10);
  for (const auto& v : sys.pairs[0].basis) CHECK(subspace_residual(v, minus_span) < 1e-10);
}

TEST_CASE("the identity operator decomposes into one full-rank pair") {
  const EigenSystem sys = eigen_decompose(OctonOperator::identity());
  REQUIRE(sys.pairs.size() == 1);
  CHECK(sys.pairs[0].multiplicity == 8);
  CHECK(std::abs(sys.pairs[0].eigenvalue - Complex(1, 0)) < 1e-12);
}

TEST_CASE("a defective operator is rejected") {
  OctonOperator jordan = OctonOperator::identity();
  jordan.at(0, 1) = Complex(1, 0);  // a 2x2 Jordan block in the corner
  CHECK_THROWS_AS(eigen_decompose(jordan), NonDiagonalizable);
}

TEST_CASE("canonical eigenbases match the listed four-term sets") {
  const auto plus = canonical_eigenbasis(EigenOperatorKind::BasisAxialK, +1);
  REQUIRE(plus.size() == 4);
  CHECK(plus[0] == Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K));
  CHECK(plus[1] == Octon::unit(BasisElement::i) + xi * Octon::unit(BasisElement::j));
  CHECK(plus[2] == Octon::unit(BasisElement::E) + Octon::unit(BasisElement::k));
  CHECK(plus[3] == Octon::unit(BasisElement::I) + xi * Octon::unit(BasisElement::J));

  const auto minus = canonical_eigenbasis(EigenOperatorKind::BasisAxialK, -1);
  CHECK(minus[0] == Octon::unit(BasisElement::One) - Octon::unit(BasisElement::K));
  CHECK(minus[1] == Octon::unit(BasisElement::i) - xi * Octon::unit(BasisElement::j));
  CHECK(minus[2] == Octon::unit(BasisElement::E) - Octon::unit(BasisElement::k));
  CHECK(minus[3] == Octon::unit(BasisElement::I) - xi * Octon::unit(BasisElement::J));

  const auto turn = canonical_eigenbasis(EigenOperatorKind::TurnZ, +1);
  CHECK(turn[0] == Octon::unit(BasisElement::One));
  CHECK(turn[1] == Octon::unit(BasisElement::E));
  CHECK(turn[2] == Octon::unit(BasisElement::k));
  CHECK(turn[3] == Octon::unit(BasisElement::K));
}

TEST_CASE("every listed eigenfunction satisfies its relation exactly") {
  for (auto kind : kAllEigenOperators) {
    const OctonOperator op = operator_of(kind);
    for (int lambda : {1, -1}) {
      for (const auto& f : canonical_eigenbasis(kind, lambda)) {
        CHECK(max_abs_diff(apply(op, f), static_cast<double>(lambda) * f) == 0.0);
      }
    }
  }
  for (int lambda : {1, -1}) {
    for (const auto& f : turn_z_combination_eigenbasis(lambda)) {
      CHECK(max_abs_diff(apply(operator_of(EigenOperatorKind::TurnZ), f),
                         static_cast<double>(lambda) * f) == 0.0);
    }
  }
}

TEST_CASE("the idempotent table closes exactly") {
  const IdempotentTable t = idempotent_table();
  CHECK(multiply(t.elements[0], t.elements[0]) == t.elements[0]);
  CHECK(multiply(t.elements[0], t.elements[1]) == Octon::zero());
  CHECK(multiply(t.elements[2], t.elements[3]) == t.elements[0]);
  CHECK(multiply(t.elements[3], t.elements[2]) == t.elements[1]);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const int idx = t.product_index[a][b];
      const Octon expected = idx < 0 ? Octon::zero() : t.elements[idx];
      CHECK(multiply(t.elements[a], t.elements[b]) == expected);
    }
  }
}

TEST_CASE("general eigenfunctions satisfy the relation and the component ties") {
  CHECK(general_eigenfunction(+1, {Complex(1, 0), {}, {}, {}}) ==
        Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K));
  CHECK(general_eigenfunction(+1, {}).max_norm() == 0.0);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const OctonOperator op = operator_of(EigenOperatorKind::BasisAxialK);
  for (int lambda : {1, -1}) {
    for (int s = 0; s < 16; ++s) {
      const std::array<Complex, 4> f = {Complex(d(rng), d(rng)), Complex(d(rng), d(rng)),
                                        Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
      const Octon psi = general_eigenfunction(lambda, f);
      CHECK(max_abs_diff(apply(op, psi), static_cast<double>(lambda) * psi) < 1e-14);
      const Complex lam(lambda, 0);
      CHECK(std::abs(psi[7] - lam * psi[0]) < 1e-14);
      CHECK(std::abs(psi[2] - xi * lam * psi[1]) < 1e-14);
      CHECK(std::abs(psi[3] - lam * psi[4]) < 1e-14);
      CHECK(std::abs(psi[6] - xi * lam * psi[5]) < 1e-14);
    }
  }
  CHECK_THROWS_AS(general_eigenfunction(2, {}), Error);
}
