#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "octon/landau.hpp"

using namespace octon;

namespace {
const PhysicalConstants kNatural;
}

TEST_CASE("closed-form level energies at the default parameters") {
  CHECK(landau_spectrum({1.0, 0.0, 0.0, 0, +1}, kNatural, false) == Catch::Approx(1.0));
  CHECK(landau_spectrum({1.0, 0.0, 0.0, 0, -1}, kNatural, false) == Catch::Approx(0.0).margin(1e-15));
  CHECK(landau_spectrum({1.0, 0.0, 0.0, 1, +1}, kNatural, false) == Catch::Approx(2.0));
  CHECK(landau_spectrum({1.0, 0.0, 0.0, 0, +1}, kNatural, true) ==
        Catch::Approx(std::sqrt(3.0)));
  // The lambda = -1 relativistic ground level sits at the rest energy.
  CHECK(landau_spectrum({1.0, 0.0, 0.0, 0, -1}, kNatural, true) == Catch::Approx(1.0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(landau_spectrum({-1.0, 0, 0, 0, 1}, kNatural, false), Error);
  CHECK_THROWS_AS(landau_spectrum({1.0, 0, 0, -1, 1}, kNatural, false), Error);
  CHECK_THROWS_AS(landau_spectrum({1.0, 0, 0, 0, 2}, kNatural, false), Error);
  CHECK_THROWS_AS(landau_oracle(1.0, 0, 0, 1, kNatural, false, 11), Error);
}

TEST_CASE("the finite-difference oracle matches the closed forms") {
  for (const bool relativistic : {false, true}) {
    for (const int lambda : {+1, -1}) {
      const auto oracle = landau_oracle(1.0, 0.15, 0.25, lambda, kNatural, relativistic, 4);
      for (int n = 0; n < 4; ++n) {
        const double closed =
            landau_spectrum({1.0, 0.15, 0.25, n, lambda}, kNatural, relativistic);
        CHECK(std::abs(oracle[n] - closed) <= 1e-4 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("nonrelativistic levels are equally spaced by the cyclotron quantum") {
  const auto levels = landau_oracle(1.0, 0.0, 0.0, +1, kNatural, false, 4);
  for (int n = 0; n + 1 < 4; ++n) {
    CHECK(levels[n + 1] - levels[n] == Catch::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("the weak-field limit approaches the free particle") {
  const double e = landau_spectrum({1e-8, 0.0, 0.8, 0, +1}, kNatural, false);
  CHECK(e == Catch::Approx(0.8 * 0.8 / 2.0).epsilon(1e-6));
}

TEST_CASE("the relativistic levels approach the nonrelativistic ones quadratically") {
  std::array<double, 3> log_b, log_diff;
  int idx = 0;
  for (const double b : {1e-1, 1e-2, 1e-3}) {
    const LandauParams p{b, 0.0, 0.0, 1, +1};
    const double diff = std::abs(landau_spectrum(p, kNatural, true) - 1.0 -
                                 landau_spectrum(p, kNatural, false));
    log_b[idx] = std::log(b);
    log_diff[idx] = std::log(diff);
    ++idx;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int s = 0; s < 3; ++s) {
    sx += log_b[s];
    sy += log_diff[s];
    sxx += log_b[s] * log_b[s];
    sxy += log_b[s] * log_diff[s];
  }
  const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  CHECK(std::abs(slope - 2.0) <= 0.2);
}

TEST_CASE("insufficient grid resolution is reported") {
  LandauGridOptions coarse;
  coarse.base_points = 4;
  CHECK_THROWS_AS(landau_oracle(1.0, 0.0, 0.0, +1, kNatural, false, 3, coarse), GridTooCoarse);
}
