#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/algebra.hpp"
#include "octon/serialization.hpp"

using namespace octon;

namespace {

Octon unit(BasisElement e) { return Octon::unit(e); }

Octon random_octon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Octon a;
  for (int s = 0; s < 8; ++s) a[s] = Complex(d(rng), d(rng));
  return a;
}

}  // namespace

TEST_CASE("basis products follow the multiplication table") {
  CHECK(multiply(unit(BasisElement::i), unit(BasisElement::j)) == xi * unit(BasisElement::K));
  CHECK(multiply(unit(BasisElement::j), unit(BasisElement::i)) == -xi * unit(BasisElement::K));
  CHECK(multiply(unit(BasisElement::i), unit(BasisElement::I)) == unit(BasisElement::E));
  CHECK(multiply(unit(BasisElement::K), unit(BasisElement::k)) == unit(BasisElement::E));
  CHECK(multiply(unit(BasisElement::E), unit(BasisElement::K)) == unit(BasisElement::k));
  for (auto e : kAllBasisElements) {
    CHECK(multiply(unit(BasisElement::One), unit(e)) == unit(e));
    CHECK(multiply(unit(e), unit(BasisElement::One)) == unit(e));
  }
}

TEST_CASE("the pseudoscalar unit is minus xi times the ordered polar product") {
  const Octon ijk =
      multiply(multiply(unit(BasisElement::i), unit(BasisElement::j)), unit(BasisElement::k));
  CHECK(-xi * ijk == unit(BasisElement::E));
  CHECK(multiply(unit(BasisElement::E), unit(BasisElement::E)) == unit(BasisElement::One));
}

TEST_CASE("all 512 ordered basis triples associate exactly") {
  for (auto a : kAllBasisElements)
    for (auto b : kAllBasisElements)
      for (auto c : kAllBasisElements) {
        const Octon lhs = multiply(multiply(unit(a), unit(b)), unit(c));
        const Octon rhs = multiply(unit(a), multiply(unit(b), unit(c)));
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("grade projection selects components and partitions the octon") {
  const Octon mixed = unit(BasisElement::One) + 2.0 * unit(BasisElement::i) +
                      3.0 * unit(BasisElement::E) + 4.0 * unit(BasisElement::K);
  CHECK(grade_project(mixed, Grade::Vector) == 2.0 * unit(BasisElement::i));
  CHECK(grade_project(mixed, Grade::Scalar) == unit(BasisElement::One));
  CHECK(grade_project(mixed, Grade::Pseudoscalar) == 3.0 * unit(BasisElement::E));
  CHECK(grade_project(mixed, Grade::Pseudovector) == 4.0 * unit(BasisElement::K));

  CHECK(grade_project(multiply(unit(BasisElement::i), unit(BasisElement::I)),
                      Grade::Pseudoscalar) == unit(BasisElement::E));

  std::mt19937_64 rng(7);
  for (int s = 0; s < 32; ++s) {
    const Octon a = random_octon(rng);
    Octon sum;
    for (auto g : {Grade::Scalar, Grade::Vector, Grade::Pseudoscalar, Grade::Pseudovector}) {
      sum += grade_project(a, g);
    }
    CHECK(sum == a);
  }
}

TEST_CASE("linear combinations are componentwise with the empty sum zero") {
  CHECK(linear_combine({}) == Octon::zero());
  CHECK(linear_combine({{Complex(1, 0), unit(BasisElement::i)},
                        {Complex(1, 0), unit(BasisElement::j)}}) ==
        unit(BasisElement::i) + unit(BasisElement::j));
  const Octon one_plus_k = unit(BasisElement::One) + unit(BasisElement::K);
  CHECK(linear_combine({{Complex(0.5, 0), one_plus_k}}) == 0.5 * one_plus_k);
}

TEST_CASE("symmetric and antisymmetric products split the full product") {
  CHECK(antisymmetric_product(unit(BasisElement::K), unit(BasisElement::i)) ==
        xi * unit(BasisElement::j));
  CHECK(symmetric_product(unit(BasisElement::i), unit(BasisElement::j)) == Octon::zero());

  std::mt19937_64 rng(11);
  for (int s = 0; s < 32; ++s) {
    const Octon a = random_octon(rng);
    const Octon b = random_octon(rng);
    CHECK(max_abs_diff(symmetric_product(a, b) + antisymmetric_product(a, b), multiply(a, b)) <
          1e-14);
    CHECK(antisymmetric_product(a, a).max_norm() == 0.0);
  }

  // Real polar vectors give the scalar dot and xi times the axial cross.
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int s = 0; s < 32; ++s) {
    const double ax = d(rng), ay = d(rng), az = d(rng);
    const double bx = d(rng), by = d(rng), bz = d(rng);
    const Octon a = Octon::polar(ax, ay, az);
    const Octon b = Octon::polar(bx, by, bz);
    CHECK(max_abs_diff(symmetric_product(a, b), Octon::scalar(ax * bx + ay * by + az * bz)) <
          1e-13);
    CHECK(max_abs_diff(antisymmetric_product(a, b),
                       xi * Octon::axial(ay * bz - az * by, az * bx - ax * bz,
                                         ax * by - ay * bx)) < 1e-13);
  }
}

TEST_CASE("complex conjugation is an involution on coefficients") {
  const double half = 0.35;
  const Octon u = Octon::scalar(std::cos(half)) + xi * std::sin(half) * unit(BasisElement::K);
  CHECK(complex_conjugate(u) ==
        Octon::scalar(std::cos(half)) - xi * std::sin(half) * unit(BasisElement::K));
  CHECK(complex_conjugate(xi * unit(BasisElement::One)) == -xi * unit(BasisElement::One));

  std::mt19937_64 rng(13);
  for (int s = 0; s < 16; ++s) {
    const Octon a = random_octon(rng);
    CHECK(complex_conjugate(complex_conjugate(a)) == a);
  }
}

TEST_CASE("octon JSON form round-trips exactly") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 32; ++s) {
    const Octon a = random_octon(rng);
    CHECK(octon_from_json(to_json(a)) == a);
  }
  const nlohmann::json j = to_json(unit(BasisElement::J));
  REQUIRE(j.size() == 8);
  CHECK(j[6][0] == 1.0);
  CHECK(j[6][1] == 0.0);
}

TEST_CASE("text form uses the basis labels") {
  const Octon a = Octon::scalar(1.0) + 2.0 * unit(BasisElement::i) - 0.5 * unit(BasisElement::K);
  const std::string s = to_string(a);
  CHECK(s.find('i') != std::string::npos);
  CHECK(s.find('K') != std::string::npos);
  CHECK(to_string(Octon::zero()) == "0");
}
