#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "octon/field_grid.hpp"
#include "octon/serialization.hpp"

using namespace octon;

namespace {

const PhysicalConstants kNatural;

Octon trig_field(double x, double y, double z, double t) {
  Octon a;
  for (int s = 0; s < 8; ++s) {
    const double spatial = std::cos(x + 0.3 * s) * std::cos(y - 0.2 * s) * std::cos(z + 0.15 * s);
    const double temporal = std::cos(1.1 * t + 0.2 * s);
    a[s] = Complex(1.0 + 0.1 * s, 0.2 - 0.05 * s) * spatial * temporal;
  }
  return a;
}

double lorentz_phi(double x, double y, double z, double t) {
  return std::cos(x) * std::cos(y) * std::cos(z) * std::cos(t);
}

std::array<double, 3> lorentz_a(double x, double y, double z, double t) {
  const double breathing = std::sin(x) * std::cos(y) * std::cos(z) * std::sin(t);
  return {breathing + 0.4 * std::sin(y) * std::cos(t), 0.3 * std::sin(z) * std::cos(t),
          0.5 * std::sin(x) * std::cos(t)};
}

}  // namespace

TEST_CASE("the factored and expanded forms differ at second order in the spacing") {
  const auto ratios =
      expansion_refinement_ratios({12, 24}, kNatural, trig_field, lorentz_phi, lorentz_a);
  REQUIRE(ratios.size() == 1);
  CHECK(ratios[0] == Catch::Approx(4.0).margin(0.5));
}

TEST_CASE("with zero potentials the identity reduces to the free wave operator") {
  auto zero_phi = [](double, double, double, double) { return 0.0; };
  auto zero_a = [](double, double, double, double) -> std::array<double, 3> {
    return {0.0, 0.0, 0.0};
  };
  const auto ratios =
      expansion_refinement_ratios({12, 24}, kNatural, trig_field, zero_phi, zero_a);
  CHECK(ratios[0] == Catch::Approx(4.0).margin(0.5));
}

TEST_CASE("the stationary Hamiltonian expansion converges at second order") {
  auto psi = [](double x, double y, double z, double) { return trig_field(x, y, z, 0.0); };
  auto phi = [](double x, double y, double z, double) {
    return std::cos(x) * std::cos(y) * std::cos(z);
  };
  auto a = [](double x, double y, double z, double) -> std::array<double, 3> {
    return {0.4 * std::sin(y), 0.3 * std::sin(z), 0.5 * std::sin(x)};
  };
  const auto ratios = expansion_refinement_ratios({12, 24}, kNatural, psi, phi, a,
                                                  ExpansionVariant::Nonrelativistic);
  CHECK(ratios[0] == Catch::Approx(4.0).margin(0.5));
}

TEST_CASE("potentials violating the required gauge are rejected") {
  auto zero_phi = [](double, double, double, double) { return 0.0; };
  auto bad_a = [](double x, double, double, double) -> std::array<double, 3> {
    return {5.0 * std::sin(x), 0.0, 0.0};
  };
  GridSpec spec;
  spec.n = 16;
  CHECK_THROWS_AS(
      em_expansion_residual(sample_grid(spec, trig_field, zero_phi, bad_a), kNatural),
      GaugeViolated);
  // An explicit tolerance overrides the automatic one.
  spec.gauge_tol = 100.0;
  CHECK_NOTHROW(
      em_expansion_residual(sample_grid(spec, trig_field, zero_phi, bad_a), kNatural));
}

TEST_CASE("grid fields round-trip through the binary form") {
  GridSpec spec;
  spec.n = 6;
  spec.nt = 3;
  const SampledGrid g = sample_grid(spec, trig_field, lorentz_phi, lorentz_a);
  std::stringstream buffer;
  save_grid(g, buffer);
  const SampledGrid back = load_grid(buffer);
  REQUIRE(back.spec.n == g.spec.n);
  REQUIRE(back.spec.nt == g.spec.nt);
  CHECK(back.h == g.h);
  CHECK(back.dt == g.dt);
  REQUIRE(back.psi.size() == g.psi.size());
  double worst = 0.0;
  for (std::size_t s = 0; s < g.psi.size(); ++s) {
    worst = std::max(worst, max_abs_diff(back.psi[s], g.psi[s]));
  }
  CHECK(worst == 0.0);
  CHECK(back.phi == g.phi);
  CHECK(back.a == g.a);
}
