#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "octon/transforms.hpp"

using namespace octon;

namespace {
Octon random_octon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Octon a;
  for (int s = 0; s < 8; ++s) a[s] = Complex(d(rng), d(rng));
  return a;
}

Axis random_axis(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  while (true) {
    Axis n = {d(rng), d(rng), d(rng)};
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (len > 0.2) {
      for (auto& v : n) v /= len;
      return n;
    }
  }
}
}  // namespace

TEST_CASE("rotor octons are normalized against their conjugates") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-6.3, 6.3);
  for (int s = 0; s < 100; ++s) {
    const Rotor r{random_axis(rng), d(rng)};
    const Octon u = rotor_octon(r);
    CHECK(max_abs_diff(multiply(complex_conjugate(u), u), Octon::unit(BasisElement::One)) <
          1e-14);
  }
}

TEST_CASE("a quarter turn about z carries the polar-x unit to polar-y") {
  const Rotor r{{0, 0, 1}, std::numbers::pi / 2};
  CHECK(max_abs_diff(rotate(Octon::unit(BasisElement::i), r), Octon::unit(BasisElement::j)) <
        1e-15);
  CHECK(max_abs_diff(rotate_closed_form(Octon::unit(BasisElement::i), r),
                     Octon::unit(BasisElement::j)) < 1e-15);
}

TEST_CASE("rotation leaves scalar and pseudoscalar grades untouched") {
  const Octon mix = Octon::unit(BasisElement::One) + 3.0 * Octon::unit(BasisElement::E);
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> d(-6.3, 6.3);
  for (int s = 0; s < 25; ++s) {
    const Rotor r{random_axis(rng), d(rng)};
    CHECK(max_abs_diff(rotate(mix, r), mix) < 1e-14);
  }
}

TEST_CASE("a full turn is the identity on octons") {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 25; ++s) {
    const Rotor r{random_axis(rng), 2.0 * std::numbers::pi};
    const Octon psi = random_octon(rng);
    CHECK(max_abs_diff(rotate(psi, r), psi) < 1e-14);
  }
  // ... while the four-column rotor matrix flips sign.
  const Rotor full{{0, 0, 1}, 2.0 * std::numbers::pi};
  CHECK((matrix_waveform(rotor_octon(full)) + Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("sandwich and closed-form rotations agree over random inputs") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> d(-6.3, 6.3);
  for (int s = 0; s < 200; ++s) {
    const Rotor r{random_axis(rng), d(rng)};
    const Octon psi = random_octon(rng);
    CHECK(max_abs_diff(rotate(psi, r), rotate_closed_form(psi, r)) < 1e-10);
  }
}

TEST_CASE("coaxial rotations add their angles") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int s = 0; s < 25; ++s) {
    const Axis n = random_axis(rng);
    const double t1 = d(rng), t2 = d(rng);
    const Octon psi = random_octon(rng);
    CHECK(max_abs_diff(rotate(rotate(psi, {n, t1}), {n, t2}), rotate(psi, {n, t1 + t2})) <
          1e-13);
  }
}

TEST_CASE("the matrix-form rotation tracks the waveform of the rotated octon") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> d(-6.3, 6.3);
  for (int s = 0; s < 100; ++s) {
    const Rotor r{random_axis(rng), d(rng)};
    const Octon psi = random_octon(rng);
    CHECK((rotate_matrix_form(psi, r) - matrix_waveform(rotate(psi, r))).cwiseAbs().maxCoeff() <
          1e-10);
  }
  const Rotor quarter{{0, 0, 1}, std::numbers::pi / 2};
  CHECK((rotate_matrix_form(Octon::unit(BasisElement::i), quarter) -
         matrix_waveform(Octon::unit(BasisElement::j)))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("boosts match the closed form and keep transversal components") {
  const double u = std::atanh(0.6);
  CHECK(max_abs_diff(boost(Octon::unit(BasisElement::One), {{1, 0, 0}, u}),
                     Octon::scalar(1.25) - 0.75 * Octon::unit(BasisElement::i)) < 1e-14);
  CHECK(max_abs_diff(boost(Octon::unit(BasisElement::j), {{1, 0, 0}, u}),
                     Octon::unit(BasisElement::j)) < 1e-15);

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> d(-2.5, 2.5);
  for (int s = 0; s < 200; ++s) {
    const LorentzBoost b{random_axis(rng), d(rng)};
    const Octon psi = random_octon(rng);
    CHECK(max_abs_diff(boost(psi, b), boost_closed_form(psi, b)) < 1e-10);
  }
  const Octon psi = random_octon(rng);
  CHECK(max_abs_diff(boost(psi, {{0, 1, 0}, 0.0}), psi) == 0.0);
}

TEST_CASE("boosts preserve the longitudinal bilinear forms of real octons") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    const LorentzBoost b{random_axis(rng), 2.5 * d(rng)};
    Octon psi;
    for (int t = 0; t < 8; ++t) psi[t] = Complex(d(rng), 0.0);
    const Octon out = boost(psi, b);
    auto longitudinal = [&](const Octon& x, int base) {
      return b.axis[0] * x[base].real() + b.axis[1] * x[base + 1].real() +
             b.axis[2] * x[base + 2].real();
    };
    const double before = psi[0].real() * psi[0].real() -
                          longitudinal(psi, 1) * longitudinal(psi, 1);
    const double after =
        out[0].real() * out[0].real() - longitudinal(out, 1) * longitudinal(out, 1);
    CHECK(std::abs(before - after) < 1e-10);
    const double before_p = psi[4].real() * psi[4].real() -
                            longitudinal(psi, 5) * longitudinal(psi, 5);
    const double after_p =
        out[4].real() * out[4].real() - longitudinal(out, 5) * longitudinal(out, 5);
    CHECK(std::abs(before_p - after_p) < 1e-10);
  }
}

TEST_CASE("unnormalized axes are rejected") {
  CHECK_THROWS_AS(rotate(Octon::unit(BasisElement::i), {{0.5, 0, 0}, 1.0}), BadAxis);
  CHECK_THROWS_AS(boost(Octon::unit(BasisElement::i), {{1.0, 1.0, 0}, 1.0}), BadAxis);
  CHECK_THROWS_AS(rotor_octon({{0, 0, 0.999}, 1.0}), BadAxis);
}
