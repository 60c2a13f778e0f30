#pragma once

// Finite-difference backend for identities involving non-constant
// potentials: the factored second-order operator evaluated by nested
// central differences is compared against its expanded form on a periodic
// box of sampled fields.  Both sides are second-order accurate, so the
// mismatch contracts by a factor of four when the spacing halves.

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "octon/algebra.hpp"
#include "octon/errors.hpp"
#include "octon/operators.hpp"
#include "octon/planewave.hpp"

namespace octon {

struct GridSpec {
  int n = 32;                               // points per axis, periodic
  double length = 2.0 * std::numbers::pi;   // box edge
  int nt = 5;                               // time slices
  double dt_factor = 0.5;                   // dt = dt_factor * h
  double gauge_tol = -1.0;                  // < 0: use 100 h^2 * field scale
};

using OctonField = std::function<Octon(double, double, double, double)>;
using ScalarField = std::function<double(double, double, double, double)>;
using VectorField = std::function<std::array<double, 3>(double, double, double, double)>;

class SampledGrid {
 public:
  GridSpec spec;
  double h = 0.0;
  double dt = 0.0;
  std::vector<Octon> psi;                    // [t][z][y][x]
  std::vector<double> phi;
  std::vector<std::array<double, 3>> a;

  std::size_t site_count() const {
    return static_cast<std::size_t>(spec.n) * spec.n * spec.n;
  }

  std::size_t index(int t, int z, int y, int x) const {
    const int n = spec.n;
    return ((static_cast<std::size_t>(t) * n + z) * n + y) * n + x;
  }

  int wrap(int i) const {
    const int n = spec.n;
    return (i % n + n) % n;
  }
};

inline SampledGrid sample_grid(const GridSpec& spec, const OctonField& psi_fn,
                               const ScalarField& phi_fn, const VectorField& a_fn) {
  SampledGrid g;
  g.spec = spec;
  g.h = spec.length / spec.n;
  g.dt = spec.dt_factor * g.h;
  const std::size_t total = static_cast<std::size_t>(spec.nt) * g.site_count();
  g.psi.resize(total);
  g.phi.resize(total);
  g.a.resize(total);
  const double t0 = -0.5 * (spec.nt - 1) * g.dt;
  for (int t = 0; t < spec.nt; ++t) {
    const double tv = t0 + t * g.dt;
    for (int z = 0; z < spec.n; ++z) {
      for (int y = 0; y < spec.n; ++y) {
        for (int x = 0; x < spec.n; ++x) {
          const std::size_t id = g.index(t, z, y, x);
          const double xv = x * g.h, yv = y * g.h, zv = z * g.h;
          g.psi[id] = psi_fn(xv, yv, zv, tv);
          g.phi[id] = phi_fn(xv, yv, zv, tv);
          g.a[id] = a_fn(xv, yv, zv, tv);
        }
      }
    }
  }
  return g;
}

enum class ExpansionVariant : std::uint8_t { Relativistic, Nonrelativistic };

namespace grid_detail {

struct Site {
  const SampledGrid* g;
  int t, z, y, x;

  std::size_t at(int dt_, int dz, int dy, int dx) const {
    return g->index(t + dt_, g->wrap(z + dz), g->wrap(y + dy), g->wrap(x + dx));
  }
};

template <typename Field>
inline auto central_space(const std::vector<Field>& f, const Site& s, int axis, double h) {
  const int dx = axis == 0 ? 1 : 0;
  const int dy = axis == 1 ? 1 : 0;
  const int dz = axis == 2 ? 1 : 0;
  return (1.0 / (2.0 * h)) * (f[s.at(0, dz, dy, dx)] - f[s.at(0, -dz, -dy, -dx)]);
}

template <typename Field>
inline auto central_time(const std::vector<Field>& f, const Site& s, double dt) {
  return (1.0 / (2.0 * dt)) * (f[s.at(1, 0, 0, 0)] - f[s.at(-1, 0, 0, 0)]);
}

inline double scalar_central_space(const std::vector<double>& f, const Site& s, int axis,
                                   double h) {
  const int dx = axis == 0 ? 1 : 0;
  const int dy = axis == 1 ? 1 : 0;
  const int dz = axis == 2 ? 1 : 0;
  return (f[s.at(0, dz, dy, dx)] - f[s.at(0, -dz, -dy, -dx)]) / (2.0 * h);
}

inline std::array<double, 3> vector_central_space(const std::vector<std::array<double, 3>>& f,
                                                  const Site& s, int axis, double h) {
  const int dx = axis == 0 ? 1 : 0;
  const int dy = axis == 1 ? 1 : 0;
  const int dz = axis == 2 ? 1 : 0;
  const auto& plus = f[s.at(0, dz, dy, dx)];
  const auto& minus = f[s.at(0, -dz, -dy, -dx)];
  return {(plus[0] - minus[0]) / (2.0 * h), (plus[1] - minus[1]) / (2.0 * h),
          (plus[2] - minus[2]) / (2.0 * h)};
}

inline std::array<double, 3> vector_central_time(const std::vector<std::array<double, 3>>& f,
                                                 const Site& s, double dt) {
  const auto& plus = f[s.at(1, 0, 0, 0)];
  const auto& minus = f[s.at(-1, 0, 0, 0)];
  return {(plus[0] - minus[0]) / (2.0 * dt), (plus[1] - minus[1]) / (2.0 * dt),
          (plus[2] - minus[2]) / (2.0 * dt)};
}

// First-order factored operator
//   (1/c) d/dt + xi e phi/(hbar c) + sign (grad - xi e A/(hbar c)) . basis
// applied to the sampled octon field at one site by central differences.
inline Octon apply_factor(const SampledGrid& g, const Site& s, const PhysicalConstants& k,
                          const std::vector<Octon>& field, double grad_sign) {
  const std::size_t id = s.at(0, 0, 0, 0);
  const Complex coupling = xi * k.e / (k.hbar * k.c);
  Octon out = (1.0 / k.c) * central_time(field, s, g.dt);
  out += coupling * g.phi[id] * field[id];
  for (int axis = 0; axis < 3; ++axis) {
    const Octon d = central_space(field, s, axis, g.h);
    out += grad_sign * multiply(Octon::unit(static_cast<BasisElement>(1 + axis)), d);
  }
  const auto& av = g.a[id];
  out -= grad_sign * coupling * multiply(Octon::polar(av[0], av[1], av[2]), field[id]);
  return out;
}

inline double field_scale(const SampledGrid& g) {
  double m = 1.0;
  for (const auto& v : g.phi) m = std::max(m, std::abs(v));
  for (const auto& v : g.a)
    m = std::max({m, std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  return m;
}

inline void check_gauge(const SampledGrid& g, const PhysicalConstants& k, bool lorentz) {
  // Potentials satisfying the gauge analytically leave only second-order
  // truncation in the discrete residual, well under 2 h^2 times the field
  // scale; violations are order one.
  const double tol =
      g.spec.gauge_tol > 0 ? g.spec.gauge_tol : 2.0 * g.h * g.h * field_scale(g);
  const int mid = g.spec.nt / 2;
  double worst = 0.0;
  for (int z = 0; z < g.spec.n; ++z) {
    for (int y = 0; y < g.spec.n; ++y) {
      for (int x = 0; x < g.spec.n; ++x) {
        const Site s{&g, mid, z, y, x};
        double div = 0.0;
        for (int axis = 0; axis < 3; ++axis) div += vector_central_space(g.a, s, axis, g.h)[axis];
        if (lorentz && g.spec.nt >= 3) {
          const double phi_t =
              (g.phi[s.at(1, 0, 0, 0)] - g.phi[s.at(-1, 0, 0, 0)]) / (2.0 * g.dt);
          div += phi_t / k.c;
        }
        worst = std::max(worst, std::abs(div));
      }
    }
  }
  if (worst > tol) {
    throw GaugeViolated("sampled potentials violate the required gauge (residual " +
                        std::to_string(worst) + ")");
  }
}

}  // namespace grid_detail

/// Max-norm difference between the nested evaluation of the factored
/// second-order operator and its expanded form, over the middle time slice.
/// Relativistic: requires the Lorentz gauge and nt >= 5.  Nonrelativistic:
/// the stationary Hamiltonian identity, requires a divergence-free vector
/// potential.  Converges at second order in the spacing.
inline double em_expansion_residual(const SampledGrid& g, const PhysicalConstants& k,
                                    ExpansionVariant variant = ExpansionVariant::Relativistic) {
  using namespace grid_detail;
  const int n = g.spec.n;
  const Complex coupling = xi * k.e / (k.hbar * k.c);

  if (variant == ExpansionVariant::Relativistic) {
    if (g.spec.nt < 5) throw Error("relativistic expansion check needs 5 time slices");
    check_gauge(g, k, /*lorentz=*/true);
    const int mid = g.spec.nt / 2;

    // Inner factor on the three middle slices.
    std::vector<Octon> inner(static_cast<std::size_t>(3) * g.site_count());
    for (int t = mid - 1; t <= mid + 1; ++t) {
      for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
          for (int x = 0; x < n; ++x) {
            const Site s{&g, t, z, y, x};
            inner[g.index(t - (mid - 1), z, y, x)] = apply_factor(g, s, k, g.psi, +1.0);
          }
    }

    // Outer factor on the middle slice of the inner result, against the
    // expanded operator on the original field.
    SampledGrid inner_grid;
    inner_grid.spec = g.spec;
    inner_grid.spec.nt = 3;
    inner_grid.h = g.h;
    inner_grid.dt = g.dt;
    inner_grid.psi = std::move(inner);
    inner_grid.phi = g.phi;  // only the middle slice values are read
    inner_grid.a = g.a;
    // Align potential slices with the inner field's three slices.
    const std::size_t offset = static_cast<std::size_t>(mid - 1) * g.site_count();
    std::copy(g.phi.begin() + offset, g.phi.begin() + offset + 3 * g.site_count(),
              inner_grid.phi.begin());
    std::copy(g.a.begin() + offset, g.a.begin() + offset + 3 * g.site_count(),
              inner_grid.a.begin());
    inner_grid.phi.resize(3 * g.site_count());
    inner_grid.a.resize(3 * g.site_count());

    double worst = 0.0;
    const double hc = k.hbar * k.c;
    for (int z = 0; z < n; ++z) {
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          const Site si{&inner_grid, 1, z, y, x};
          const Octon lhs = apply_factor(inner_grid, si, k, inner_grid.psi, -1.0);

          const Site s{&g, mid, z, y, x};
          const std::size_t id = s.at(0, 0, 0, 0);
          const Octon& f = g.psi[id];
          const auto& av = g.a[id];
          const double phiv = g.phi[id];

          // (1/c^2) d2/dt2 - laplacian
          Octon rhs = (1.0 / (k.c * k.c * g.dt * g.dt)) *
                      (g.psi[s.at(1, 0, 0, 0)] - 2.0 * f + g.psi[s.at(-1, 0, 0, 0)]);
          for (int axis = 0; axis < 3; ++axis) {
            const int dx = axis == 0 ? 1 : 0, dy = axis == 1 ? 1 : 0, dz = axis == 2 ? 1 : 0;
            rhs -= (1.0 / (g.h * g.h)) *
                   (g.psi[s.at(0, dz, dy, dx)] - 2.0 * f + g.psi[s.at(0, -dz, -dy, -dx)]);
          }
          // 2 xi e/(hbar c) ((A, grad) + (phi/c) d/dt)
          Octon directional;
          for (int axis = 0; axis < 3; ++axis) {
            directional += av[axis] * central_space(g.psi, s, axis, g.h);
          }
          rhs += 2.0 * coupling * directional;
          rhs += 2.0 * coupling * (phiv / k.c) * central_time(g.psi, s, g.dt);
          // e^2/(hbar c)^2 (A^2 - phi^2)
          const double a2 = av[0] * av[0] + av[1] * av[1] + av[2] * av[2];
          rhs += (k.e * k.e / (hc * hc)) * (a2 - phiv * phiv) * f;
          // - e/(hbar c) H . - with H the curl of A on the axial basis
          std::array<double, 3> curl{};
          const auto dax = vector_central_space(g.a, s, 0, g.h);
          const auto day = vector_central_space(g.a, s, 1, g.h);
          const auto daz = vector_central_space(g.a, s, 2, g.h);
          curl[0] = day[2] - daz[1];
          curl[1] = daz[0] - dax[2];
          curl[2] = dax[1] - day[0];
          rhs -= (k.e / hc) * multiply(Octon::axial(curl[0], curl[1], curl[2]), f);
          // + xi e/(hbar c) E . - with E = -grad phi - (1/c) dA/dt
          std::array<double, 3> efield;
          const auto a_t = vector_central_time(g.a, s, g.dt);
          for (int axis = 0; axis < 3; ++axis) {
            efield[axis] = -scalar_central_space(g.phi, s, axis, g.h) - a_t[axis] / k.c;
          }
          rhs += coupling * multiply(Octon::polar(efield[0], efield[1], efield[2]), f);

          worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
      }
    }
    return worst;
  }

  // Stationary Hamiltonian identity.
  check_gauge(g, k, /*lorentz=*/false);
  const int mid = g.spec.nt / 2;
  const double hh = g.h * g.h;
  const Complex grad_coupling = xi * k.hbar * k.e / (2.0 * k.m * k.c);

  // G psi = (grad - xi e A/(hbar c)) psi on the middle slice plus neighbors:
  // evaluated everywhere on the slice, then the outer G applied at each
  // point.  Time derivatives do not appear.
  std::vector<Octon> gpsi(g.site_count());
  auto apply_g = [&](const std::vector<Octon>& field, const SampledGrid& src, int t, int z,
                     int y, int x) {
    const Site s{&src, t, z, y, x};
    const std::size_t id = s.at(0, 0, 0, 0);
    Octon out;
    for (int axis = 0; axis < 3; ++axis) {
      out += multiply(Octon::unit(static_cast<BasisElement>(1 + axis)),
                      central_space(field, s, axis, src.h));
    }
    const auto& av = src.a[id];
    out -= coupling * multiply(Octon::polar(av[0], av[1], av[2]), field[id]);
    return out;
  };

  SampledGrid slice;
  slice.spec = g.spec;
  slice.spec.nt = 1;
  slice.h = g.h;
  slice.dt = g.dt;
  slice.psi.assign(g.psi.begin() + mid * g.site_count(),
                   g.psi.begin() + (mid + 1) * g.site_count());
  slice.phi.assign(g.phi.begin() + mid * g.site_count(),
                   g.phi.begin() + (mid + 1) * g.site_count());
  slice.a.assign(g.a.begin() + mid * g.site_count(), g.a.begin() + (mid + 1) * g.site_count());

  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) gpsi[slice.index(0, z, y, x)] = apply_g(slice.psi, slice, 0, z, y, x);

  double worst = 0.0;
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        const Site s{&slice, 0, z, y, x};
        const std::size_t id = s.at(0, 0, 0, 0);
        const Octon& f = slice.psi[id];
        const auto& av = slice.a[id];

        const Octon lhs = (-k.hbar * k.hbar / (2.0 * k.m)) * apply_g(gpsi, slice, 0, z, y, x) +
                          k.e * slice.phi[id] * f;

        Octon rhs;
        for (int axis = 0; axis < 3; ++axis) {
          const int dx = axis == 0 ? 1 : 0, dy = axis == 1 ? 1 : 0, dz = axis == 2 ? 1 : 0;
          rhs -= (k.hbar * k.hbar / (2.0 * k.m * hh)) *
                 (slice.psi[s.at(0, dz, dy, dx)] - 2.0 * f + slice.psi[s.at(0, -dz, -dy, -dx)]);
        }
        double div = 0.0;
        Octon directional;
        std::array<double, 3> curl{};
        const auto dax = vector_central_space(slice.a, s, 0, g.h);
        const auto day = vector_central_space(slice.a, s, 1, g.h);
        const auto daz = vector_central_space(slice.a, s, 2, g.h);
        div = dax[0] + day[1] + daz[2];
        curl[0] = day[2] - daz[1];
        curl[1] = daz[0] - dax[2];
        curl[2] = dax[1] - day[0];
        for (int axis = 0; axis < 3; ++axis) {
          directional += av[axis] * central_space(slice.psi, s, axis, g.h);
        }
        rhs += grad_coupling * div * f;
        rhs += 2.0 * grad_coupling * directional;
        const double a2 = av[0] * av[0] + av[1] * av[1] + av[2] * av[2];
        rhs += (k.e * k.e / (2.0 * k.m * k.c * k.c)) * a2 * f;
        rhs += k.e * slice.phi[id] * f;
        rhs -= (k.hbar * k.e / (2.0 * k.m * k.c)) *
               multiply(Octon::axial(curl[0], curl[1], curl[2]), f);

        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
    }
  }
  return worst;
}

/// Residual ratios under successive halvings of the spacing; second-order
/// stencils give ratios near four.
inline std::vector<double> expansion_refinement_ratios(
    const std::vector<int>& sizes, const PhysicalConstants& k, const OctonField& psi_fn,
    const ScalarField& phi_fn, const VectorField& a_fn,
    ExpansionVariant variant = ExpansionVariant::Relativistic, double length = 2.0 * std::numbers::pi) {
  std::vector<double> residuals;
  for (int n : sizes) {
    GridSpec spec;
    spec.n = n;
    spec.length = length;
    residuals.push_back(em_expansion_residual(sample_grid(spec, psi_fn, phi_fn, a_fn), k, variant));
  }
  std::vector<double> ratios;
  for (std::size_t s = 1; s < residuals.size(); ++s) ratios.push_back(residuals[s - 1] / residuals[s]);
  return ratios;
}

}  // namespace octon
