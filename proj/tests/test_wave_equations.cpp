#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/reference_tables.hpp"
#include "octon/wave_equations.hpp"

using namespace octon;

namespace {
const PhysicalConstants kNatural;  // hbar = c = m = 1, e = -1

PlaneWaveState random_state(std::mt19937_64& rng, bool on_shell) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  PlaneWaveState s;
  s.momentum = {2.0 * d(rng), 2.0 * d(rng), 2.0 * d(rng)};
  const double shell = on_shell_energy(s.momentum, kNatural);
  s.energy = on_shell ? shell : shell * 1.7 + 0.3;
  for (int t = 0; t < 8; ++t) s.amplitude[t] = Complex(d(rng), d(rng));
  return s;
}
}  // namespace

TEST_CASE("rest-energy scalar states solve the first-order equation") {
  const FirstOrderSpec spec = variant_by_name("a1");
  PlaneWaveState rest{1.0, {0, 0, 0}, Octon::unit(BasisElement::One)};
  CHECK(apply_first_order(spec, rest, kNatural).max_norm() < 1e-15);

  PlaneWaveState doubled{2.0, {0, 0, 0}, Octon::unit(BasisElement::One)};
  CHECK(max_abs_diff(apply_first_order(spec, doubled, kNatural),
                     -xi * Octon::unit(BasisElement::One)) < 1e-15);

  PlaneWaveState zero{1.3, {0.2, 0, 0}, Octon::zero()};
  CHECK(apply_first_order(spec, zero, kNatural).max_norm() == 0.0);
}

TEST_CASE("dispersion roots are fourfold degenerate for every variant") {
  // Rest frame: roots at plus and minus the rest energy.
  for (const auto& [name, spec] : first_order_variants()) {
    const auto roots = dispersion_roots(spec, {0, 0, 0}, kNatural);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].energy == 1.0);
    CHECK(roots[1].energy == -1.0);
    CHECK(roots[0].multiplicity == 4);
    CHECK(roots[1].multiplicity == 4);
  }
  // Moving frame example.
  const auto roots = dispersion_roots(variant_by_name("a1"), {3, 0, 0}, kNatural);
  CHECK(roots[0].energy == Catch::Approx(std::sqrt(10.0)).epsilon(1e-12));
  CHECK(roots[0].multiplicity == 4);
  // Massless light cone.
  PhysicalConstants massless = kNatural;
  massless.m = 0.0;
  const auto cone = dispersion_roots(variant_by_name("b2"), {1, 0, 0}, massless);
  CHECK(cone[0].energy == Catch::Approx(1.0));
  CHECK(cone[0].multiplicity == 4);
  CHECK(cone[1].multiplicity == 4);
}

TEST_CASE("off the mass shell the first-order matrix is invertible") {
  std::mt19937_64 rng(67);
  for (const auto& [name, spec] : first_order_variants()) {
    for (int s = 0; s < 5; ++s) {
      const PlaneWaveState st = random_state(rng, false);
      CHECK(nullspace_dimension(spec, st.energy, st.momentum, kNatural) == 0);
    }
  }
}

TEST_CASE("the determinant is the fourth power of the shell polynomial") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const auto& [name, spec] : first_order_variants()) {
    const Real3 p = {d(rng), d(rng), d(rng)};
    const double shell_sq = momentum_squared(p) + 1.0;
    Complex ratio0{};
    for (int t = 0; t < 9; ++t) {
      const double energy = std::sqrt(shell_sq) * (1.2 + 0.3 * t);
      const double quartic = std::pow(energy * energy - shell_sq, 4);
      const Complex ratio = first_order_determinant(spec, energy, p, kNatural) / quartic;
      if (t == 0) ratio0 = ratio;
      CHECK(std::abs(ratio - ratio0) < 1e-8 * std::abs(ratio0));
    }
  }
}

TEST_CASE("conjugate pairs factor the second-order polynomial with the stated sign") {
  std::mt19937_64 rng(73);
  for (const auto& [name, spec] : first_order_variants()) {
    const FirstOrderSpec conj = conjugate_spec(spec);
    CHECK(kg_polynomial_sign(spec) == (spec.time_factor == TimeFactor::Identity ? 1 : -1));
    for (int s = 0; s < 10; ++s) {
      const PlaneWaveState st = random_state(rng, s % 2 == 0);
      CHECK(factorization_residual(conj, spec, st, kNatural).max_norm() < 1e-12);
    }
  }
  // A mismatched pairing is rejected.
  const PlaneWaveState st = random_state(rng, true);
  CHECK_THROWS_AS(factorization_residual(conjugate_spec(variant_by_name("a1")),
                                         variant_by_name("b1"), st, kNatural),
                  NotConjugatePair);
}

TEST_CASE("solutions of any first-order variant satisfy the second-order equation") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const auto& [name, spec] : first_order_variants()) {
    const Real3 p = {d(rng), d(rng), d(rng)};
    const double energy = on_shell_energy(p, kNatural);
    for (const auto& amp : nullspace_basis(spec, energy, p, kNatural)) {
      PlaneWaveState st{energy, p, amp};
      CHECK(kg_residual(st, kNatural).max_norm() < 1e-12);
      CHECK(apply_first_order(spec, st, kNatural).max_norm() < 1e-7);
    }
  }
}

TEST_CASE("the second-order residual vanishes exactly on shell") {
  std::mt19937_64 rng(83);
  for (int s = 0; s < 20; ++s) {
    const PlaneWaveState st = random_state(rng, true);
    CHECK(kg_residual(st, kNatural).max_norm() < 1e-14);
  }
  PlaneWaveState rest{0.0, {0, 0, 0}, Octon::unit(BasisElement::J)};
  CHECK(max_abs_diff(kg_residual(rest, kNatural), Octon::unit(BasisElement::J)) < 1e-15);
}

TEST_CASE("the componentwise scalar system matches the operator matrices") {
  const FirstOrderSymbols sym = first_order_symbols(variant_by_name("a1"));
  CHECK(max_abs_diff(sym.time, OctonOperator::identity()) == 0.0);
  CHECK(max_abs_diff(sym.gradient[0], left_multiplication_operator(BasisElement::i)) == 0.0);
  CHECK(max_abs_diff(sym.mass, xi * inversion_operator()) == 0.0);

  // The listed scalar system disagrees with the generated one only in the
  // recorded rows.
  OctonOperator listed_time, listed_mass;
  std::array<OctonOperator, 3> listed_grad;
  for (const auto& term : reference::listed_first_order_system()) {
    const Complex v = reference::decode_entry(term.coeff);
    if (term.deriv == 0) listed_time.at(term.row, term.source) += v;
    else if (term.deriv == 4) listed_mass.at(term.row, term.source) += v;
    else listed_grad[term.deriv - 1].at(term.row, term.source) += v;
  }
  std::vector<int> discrepant;
  for (int row = 0; row < 8; ++row) {
    double diff = 0.0;
    for (int col = 0; col < 8; ++col) {
      diff = std::max(diff, std::abs(listed_time(row, col) - sym.time(row, col)));
      diff = std::max(diff, std::abs(listed_mass(row, col) - sym.mass(row, col)));
      for (int d3 = 0; d3 < 3; ++d3) {
        diff = std::max(diff, std::abs(listed_grad[d3](row, col) - sym.gradient[d3](row, col)));
      }
    }
    if (diff > 0.0) discrepant.push_back(row);
  }
  CHECK(discrepant == reference::known_system_discrepant_rows());
}

TEST_CASE("the classical product identity collapses to the scalar relation") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int s = 0; s < 100; ++s) {
    const double energy = d(rng);
    const Real3 p = {d(rng), d(rng), d(rng)};
    const double phi = d(rng);
    const Real3 a = {d(rng), d(rng), d(rng)};
    const Octon res = einstein_identity_residual(energy, p, phi, a, kNatural);
    CHECK(res.max_norm() < 1e-12 * std::max(1.0, energy * energy + momentum_squared(p)));
    CHECK(grade_project(res, Grade::Vector).max_norm() < 1e-13);
  }
  CHECK(einstein_identity_residual(1.3, {0.5, 0, 0}, 0.0, {0, 0, 0}, kNatural).max_norm() <
        1e-14);
}
