#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/operators.hpp"
#include "octon/verify.hpp"

using namespace octon;

namespace {
Octon generic_column() {
  Octon psi;
  for (int s = 0; s < 8; ++s) psi[s] = Complex(1.0 + s, 0.5 - 0.125 * s);
  return psi;
}
}  // namespace

TEST_CASE("the polar-x operator permutes the component column as listed") {
  const Octon psi = generic_column();
  const Octon got = apply(left_multiplication_operator(BasisElement::i), psi);
  CHECK(got[0] == psi[1]);
  CHECK(got[1] == psi[0]);
  CHECK(got[2] == -xi * psi[7]);
  CHECK(got[3] == xi * psi[6]);
  CHECK(got[4] == psi[5]);
  CHECK(got[5] == psi[4]);
  CHECK(got[6] == -xi * psi[3]);
  CHECK(got[7] == xi * psi[2]);
}

TEST_CASE("the pseudoscalar operator swaps the two component blocks") {
  const OctonOperator e = left_multiplication_operator(BasisElement::E);
  const Octon psi = generic_column();
  const Octon got = apply(e, psi);
  for (int s = 0; s < 4; ++s) {
    CHECK(got[s] == psi[s + 4]);
    CHECK(got[s + 4] == psi[s]);
  }
}

TEST_CASE("every non-scalar basis operator squares to the identity") {
  for (auto e : kAllBasisElements) {
    if (e == BasisElement::One) continue;
    const OctonOperator op = left_multiplication_operator(e);
    CHECK(max_abs_diff(compose(op, op), OctonOperator::identity()) == 0.0);
  }
}

TEST_CASE("operators act as left multiplication and compose as the algebra") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Octon x;
  for (int s = 0; s < 8; ++s) x[s] = Complex(d(rng), d(rng));
  for (auto e : kAllBasisElements) {
    CHECK(max_abs_diff(apply(left_multiplication_operator(e), x),
                       multiply(Octon::unit(e), x)) == 0.0);
  }
  for (auto a : kAllBasisElements) {
    for (auto b : kAllBasisElements) {
      const auto [coeff, basis] = basis_product(a, b);
      CHECK(max_abs_diff(
                compose(left_multiplication_operator(a), left_multiplication_operator(b)),
                coeff * left_multiplication_operator(basis)) == 0.0);
    }
  }
}

TEST_CASE("spatial inversion flips vector and pseudoscalar components only") {
  const OctonOperator r = inversion_operator();
  const Octon psi = generic_column();
  const Octon got = apply(r, psi);
  CHECK(got[0] == psi[0]);
  for (int s = 1; s <= 4; ++s) CHECK(got[s] == -psi[s]);
  for (int s = 5; s < 8; ++s) CHECK(got[s] == psi[s]);
  CHECK(max_abs_diff(compose(r, r), OctonOperator::identity()) == 0.0);

  const OctonOperator op_i = left_multiplication_operator(BasisElement::i);
  CHECK((compose(r, op_i) + compose(op_i, r)).max_norm() == 0.0);
  CHECK(max_abs_diff(compose(r, op_i), -compose(op_i, r)) == 0.0);
}

TEST_CASE("commutation classification matches the known witnesses") {
  const OctonOperator r = inversion_operator();
  CHECK(commutation_sign(discrete_symmetry_operator(DiscreteSymmetry::Rx),
                         left_multiplication_operator(BasisElement::i)) ==
        CommutationKind::Anticommute);
  CHECK(commutation_sign(r, left_multiplication_operator(BasisElement::I)) ==
        CommutationKind::Commute);
  CHECK(commutation_sign(left_multiplication_operator(BasisElement::i),
                         left_multiplication_operator(BasisElement::j)) ==
        CommutationKind::Anticommute);
  // A projector neither commutes nor anticommutes with a polar operator.
  CHECK(commutation_sign(projector(ProjectorKind::SpinZPlus),
                         left_multiplication_operator(BasisElement::i)) ==
        CommutationKind::Neither);
}

TEST_CASE("reflections and discrete turns act as diagonal sign patterns") {
  const Octon psi = generic_column();
  const Octon got = apply(discrete_symmetry_operator(DiscreteSymmetry::Rx), psi);
  CHECK(got[0] == psi[0]);
  CHECK(got[1] == -psi[1]);
  CHECK(got[2] == psi[2]);
  CHECK(got[3] == psi[3]);
  CHECK(got[4] == -psi[4]);
  CHECK(got[5] == psi[5]);
  CHECK(got[6] == -psi[6]);
  CHECK(got[7] == -psi[7]);

  const OctonOperator piz = discrete_symmetry_operator(DiscreteSymmetry::PiZ);
  CHECK(apply(piz, Octon::unit(BasisElement::k)) == Octon::unit(BasisElement::k));
  CHECK(apply(piz, Octon::unit(BasisElement::i)) == -Octon::unit(BasisElement::i));

  CHECK(max_abs_diff(compose(discrete_symmetry_operator(DiscreteSymmetry::Rx),
                             discrete_symmetry_operator(DiscreteSymmetry::Ry)),
                     discrete_symmetry_operator(DiscreteSymmetry::PiZ)) == 0.0);
  const OctonOperator rxyz = compose(
      compose(discrete_symmetry_operator(DiscreteSymmetry::Rx),
              discrete_symmetry_operator(DiscreteSymmetry::Ry)),
      discrete_symmetry_operator(DiscreteSymmetry::Rz));
  CHECK(max_abs_diff(rxyz, inversion_operator()) == 0.0);
}

TEST_CASE("projectors are idempotent orthogonal pairs summing to the identity") {
  for (auto kind : kAllProjectors) {
    const OctonOperator p = projector(kind);
    CHECK(max_abs_diff(compose(p, p), p) == 0.0);
  }
  CHECK(compose(projector(ProjectorKind::SpinZPlus), projector(ProjectorKind::SpinZMinus))
            .max_norm() == 0.0);
  CHECK(max_abs_diff(projector(ProjectorKind::ParticlePlus) +
                         projector(ProjectorKind::ParticleMinus),
                     OctonOperator::identity()) == 0.0);

  // Parity split keeps scalar + pseudovector, or pseudoscalar + vector.
  const Octon psi = generic_column();
  const Octon sym = apply(projector(ProjectorKind::ParityPlus), psi);
  CHECK(sym[0] == psi[0]);
  CHECK(sym[1] == Complex{});
  CHECK(sym[4] == Complex{});
  CHECK(sym[7] == psi[7]);

  // Particle projector folds the two blocks through the pseudoscalar unit.
  const Octon folded = apply(projector(ProjectorKind::ParticlePlus), psi);
  const Octon expected =
      0.5 * multiply(Octon::unit(BasisElement::One) + Octon::unit(BasisElement::E), psi);
  CHECK(max_abs_diff(folded, expected) == 0.0);
}

TEST_CASE("the cross-check report covers the four table families and passes") {
  const VerificationReport report = verify_operator_tables();
  CHECK(report.checks.size() == 64 + 49 + 49 + 1);
  CHECK(report.all_passed());
}

TEST_CASE("an injected sign flip is caught and names the cell") {
  SuiteOptions opt;
  opt.flip_generated_entry = SuiteOptions::ListingFlip{BasisElement::j, 0, 2};
  const VerificationReport report = verify_operator_tables(opt);
  CHECK_FALSE(report.all_passed());
  bool named = false;
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    if (c.counterexample.contains("row") && c.counterexample["row"] == 0 &&
        c.counterexample["col"] == 2) {
      named = true;
    }
  }
  CHECK(named);
}

TEST_CASE("an injected product-table flip is caught and names the pair") {
  SuiteOptions opt;
  opt.flip_product_cell = {{BasisElement::i, BasisElement::j}};
  const VerificationReport report = verify_algebra(opt);
  CHECK_FALSE(report.all_passed());
  bool named = false;
  for (const auto& c : report.checks) {
    if (!c.passed && c.counterexample.contains("left")) {
      CHECK(c.counterexample["left"] == "i");
      CHECK(c.counterexample["right"] == "j");
      named = true;
      break;
    }
  }
  CHECK(named);
}
