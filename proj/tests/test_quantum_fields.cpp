#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "octon/quantum_fields.hpp"

using namespace octon;

namespace {
const PhysicalConstants kNatural;

PlaneWaveState random_state(std::mt19937_64& rng, bool on_shell) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  PlaneWaveState s;
  s.momentum = {1.5 * d(rng), 1.5 * d(rng), 1.5 * d(rng)};
  const double shell = on_shell_energy(s.momentum, kNatural);
  s.energy = on_shell ? shell : shell * 1.6 + 0.4;
  for (int t = 0; t < 8; ++t) s.amplitude[t] = Complex(d(rng), d(rng));
  return s;
}
}  // namespace

TEST_CASE("the rest-energy scalar state carries no quantum fields") {
  PlaneWaveState rest{1.0, {0, 0, 0}, Octon::unit(BasisElement::One)};
  CHECK(fields_from_state(rest, kNatural).max_norm() < 1e-15);

  PlaneWaveState doubled{2.0, {0, 0, 0}, Octon::unit(BasisElement::One)};
  const FieldSet f = fields_from_state(doubled, kNatural);
  CHECK(std::abs(f.e - (-xi)) < 1e-15);
  CHECK(std::abs(f.h) == 0.0);
  for (int d = 0; d < 3; ++d) {
    CHECK(std::abs(f.electric[d]) == 0.0);
    CHECK(std::abs(f.magnetic[d]) == 0.0);
  }

  PlaneWaveState zero{1.0, {0.7, 0, 0}, Octon::zero()};
  CHECK(fields_from_state(zero, kNatural).max_norm() == 0.0);
}

TEST_CASE("the field system vanishes exactly on shell and only there") {
  std::mt19937_64 rng(101);
  for (int s = 0; s < 50; ++s) {
    const PlaneWaveState st = random_state(rng, true);
    CHECK(field_system_residual(st, kNatural).max_norm() <
          1e-12 * std::max(1.0, st.amplitude.max_norm()));
  }
  for (int s = 0; s < 20; ++s) {
    const PlaneWaveState st = random_state(rng, false);
    CHECK(field_system_residual(st, kNatural).max_norm() > 1e-6);
  }
}

TEST_CASE("constant potentials shift the shell condition") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int s = 0; s < 25; ++s) {
    const Potentials pot = Potentials::constant(d(rng), {d(rng), d(rng), d(rng)});
    Real3 shifted = {d(rng), d(rng), d(rng)};
    PlaneWaveState st;
    for (int a = 0; a < 3; ++a) {
      st.momentum[a] = shifted[a] + (kNatural.e / kNatural.c) * pot.vector_potential[a];
    }
    st.energy = on_shell_energy(shifted, kNatural) + kNatural.e * pot.phi;
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int t = 0; t < 8; ++t) st.amplitude[t] = Complex(amp(rng), amp(rng));
    CHECK(field_system_residual(st, kNatural, pot).max_norm() < 1e-12);
  }
}

TEST_CASE("nonconstant potentials are rejected by the plane-wave backend") {
  PlaneWaveState st{1.0, {0, 0, 0}, Octon::unit(BasisElement::One)};
  CHECK_THROWS_AS(fields_from_state(st, kNatural, Potentials::homogeneous_field_gauge(1.0)),
                  NonConstantPotential);
  CHECK_THROWS_AS(field_system_residual(st, kNatural, Potentials::homogeneous_field_gauge(1.0)),
                  NonConstantPotential);
}

TEST_CASE("gauge expressions equal the scalar and pseudoscalar fields") {
  std::mt19937_64 rng(107);
  for (int s = 0; s < 25; ++s) {
    const PlaneWaveState st = random_state(rng, s % 2 == 0);
    const auto [scalar_res, pseudo_res] = gauge_residual(st, kNatural);
    const FieldSet f = fields_from_state(st, kNatural);
    CHECK(std::abs(scalar_res - f.e) < 1e-13);
    CHECK(std::abs(pseudo_res + xi * f.h) < 1e-13);
  }
}

TEST_CASE("first-order nullspace solutions create no fields") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const FirstOrderSpec spec = variant_by_name("a1");
  for (int s = 0; s < 10; ++s) {
    const Real3 p = {d(rng), d(rng), d(rng)};
    const double energy = (s % 2 ? -1.0 : 1.0) * on_shell_energy(p, kNatural);
    const auto basis = nullspace_basis(spec, energy, p, kNatural);
    REQUIRE(basis.size() == 4);
    for (const auto& amp : basis) {
      PlaneWaveState st{energy, p, amp};
      CHECK(fields_from_state(st, kNatural).max_norm() < 1e-12);
    }
  }
}

TEST_CASE("potential pairs produce fields with the stated identities") {
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int s = 0; s < 25; ++s) {
    PotentialPair pair;
    pair.momentum = {d(rng), d(rng), d(rng)};
    pair.energy = 2.0 * d(rng);
    pair.scalar_amp = Complex(d(rng), d(rng));
    for (auto& v : pair.vector_amp) v = Complex(d(rng), d(rng));

    const auto [evec, hvec] =
        fields_from_potentials(pair, kNatural, PotentialVariant::VectorPotentials, 1e9);
    // The magnetic field is a bracket, so its divergence vanishes for any
    // potentials at all.
    CHECK(std::abs(plane_divergence(pair.energy, pair.momentum, hvec, kNatural)) < 1e-13);

    const auto [evec2, hvec2] =
        fields_from_potentials(pair, kNatural, PotentialVariant::PseudovectorPotentials, 1e9);
    CHECK(std::abs(plane_divergence(pair.energy, pair.momentum, evec2, kNatural)) < 1e-13);
    (void)evec;
    (void)hvec2;
  }
}

TEST_CASE("zero potentials give zero fields and a transverse pair gives the bracket") {
  PotentialPair pair;
  pair.momentum = {0.0, 0.0, 1.2};
  pair.energy = 0.7;
  const auto [evec, hvec] =
      fields_from_potentials(pair, kNatural, PotentialVariant::VectorPotentials);
  for (int d = 0; d < 3; ++d) {
    CHECK(std::abs(evec[d]) == 0.0);
    CHECK(std::abs(hvec[d]) == 0.0);
  }

  pair.vector_amp = {Complex(1, 0), Complex(0, 0.5), Complex{}};
  const auto [e2, h2] =
      fields_from_potentials(pair, kNatural, PotentialVariant::VectorPotentials, 1e9);
  const Octon grad = (xi / kNatural.hbar) * Octon::polar(0.0, 0.0, 1.2);
  const Octon pot = Octon::polar(pair.vector_amp[0], pair.vector_amp[1], pair.vector_amp[2]);
  const auto expected = axial_part(antisymmetric_product(grad, pot));
  for (int d = 0; d < 3; ++d) CHECK(std::abs(h2[d] - expected[d]) < 1e-14);
  (void)e2;
}

TEST_CASE("pure-gauge shifts leave the fields unchanged") {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const auto variant :
       {PotentialVariant::VectorPotentials, PotentialVariant::PseudovectorPotentials}) {
    for (int s = 0; s < 25; ++s) {
      PotentialPair pair;
      pair.momentum = {d(rng), d(rng), d(rng)};
      pair.energy = 2.0 * d(rng);
      pair.scalar_amp = Complex(d(rng), d(rng));
      for (auto& v : pair.vector_amp) v = Complex(d(rng), d(rng));
      const Complex f(d(rng), d(rng));
      const PotentialPair shifted = gauge_shift(pair, f, kNatural, variant);
      const auto [e0, h0] = fields_from_potentials(pair, kNatural, variant, 1e9);
      const auto [e1, h1] = fields_from_potentials(shifted, kNatural, variant, 1e9);
      for (int a = 0; a < 3; ++a) {
        CHECK(std::abs(e1[a] - e0[a]) < 1e-12);
        CHECK(std::abs(h1[a] - h0[a]) < 1e-12);
      }
      // The gauge residual moves by minus the shell polynomial times the
      // gauge amplitude.
      const Complex delta = potential_gauge_residual(shifted, kNatural, variant) -
                            potential_gauge_residual(pair, kNatural, variant);
      CHECK(std::abs(delta + kg_polynomial(pair.energy, pair.momentum, kNatural) * f) < 1e-12);
    }
  }
  // The zero shift is a no-op.
  PotentialPair pair;
  pair.momentum = {0.2, -0.4, 0.6};
  pair.energy = 1.2;
  pair.scalar_amp = Complex(0.3, 0.1);
  pair.vector_amp = {Complex(1, 0), Complex(0, 1), Complex(0.5, -0.5)};
  const PotentialPair same = gauge_shift(pair, Complex{}, kNatural);
  CHECK(same.scalar_amp == pair.scalar_amp);
  CHECK(same.vector_amp == pair.vector_amp);
}

TEST_CASE("gauge-violating pairs are rejected") {
  PotentialPair pair;
  pair.momentum = {1.0, 0.0, 0.0};
  pair.energy = 0.9;
  pair.scalar_amp = Complex(1.0, 0.0);
  pair.vector_amp = {Complex(5.0, 0.0), Complex{}, Complex{}};
  CHECK_THROWS_AS(fields_from_potentials(pair, kNatural, PotentialVariant::VectorPotentials),
                  GaugeViolated);
}
