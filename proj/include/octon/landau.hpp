#pragma once

// Energy levels of a charged particle in a homogeneous magnetic field along
// z (gauge A_y = B x): closed-form spectra for the nonrelativistic and
// relativistic second-order equations, and an independent finite-difference
// oscillator oracle with Richardson extrapolation.
//
// The pseudovector spin term enters both spectra only through the eigenvalue
// lambda = +/-1 of the axial-K operator; the remaining problem is a shifted
// 1D harmonic oscillator in x.

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "octon/errors.hpp"
#include "octon/planewave.hpp"

namespace octon {

struct LandauParams {
  double b = 1.0;    // field magnitude along z, > 0
  double p_y = 0.0;  // motion integrals
  double p_z = 0.0;
  int n = 0;         // level index >= 0
  int lambda = +1;   // axial-K eigenvalue, +/-1
};

inline void validate(const LandauParams& p) {
  if (p.b <= 0.0) throw Error("field magnitude must be positive");
  if (p.n < 0) throw Error("level index must be nonnegative");
  if (p.lambda != 1 && p.lambda != -1) throw Error("lambda must be +1 or -1");
}

/// Nonrelativistic closed form:
///   E = p_z^2/2m + (hbar |e| B / m c)(n + 1/2) - lambda (hbar e / 2 m c) B.
inline double landau_spectrum_nonrelativistic(const LandauParams& p, const PhysicalConstants& k) {
  validate(p);
  const double cyclotron = std::abs(k.e) * p.b / (k.m * k.c);
  return p.p_z * p.p_z / (2.0 * k.m) + k.hbar * cyclotron * (p.n + 0.5) -
         p.lambda * k.hbar * k.e * p.b / (2.0 * k.m * k.c);
}

/// Relativistic closed form for E^2:
///   E^2 = m^2 c^4 + p_z^2 c^2 + |e| B hbar c (2n + 1) - lambda e B hbar c.
inline double landau_spectrum_squared_relativistic(const LandauParams& p,
                                                   const PhysicalConstants& k) {
  validate(p);
  return k.m * k.m * std::pow(k.c, 4) + p.p_z * p.p_z * k.c * k.c +
         std::abs(k.e) * p.b * k.hbar * k.c * (2.0 * p.n + 1.0) -
         p.lambda * k.e * p.b * k.hbar * k.c;
}

/// Closed-form level energy; the relativistic branch returns the positive
/// root.
inline double landau_spectrum(const LandauParams& p, const PhysicalConstants& k,
                              bool relativistic) {
  if (!relativistic) return landau_spectrum_nonrelativistic(p, k);
  return std::sqrt(landau_spectrum_squared_relativistic(p, k));
}

struct LandauGridOptions {
  int base_points = 600;      // coarsest interior point count
  int levels = 3;             // refinement levels (each halves h)
  double half_width = 8.0;    // domain half width in oscillator lengths
  double ratio_low = 2.5;     // acceptable Richardson ratio window
  double ratio_high = 6.0;
  double converged_tol = 1e-12;  // below this, refinement noise is ignored
};

namespace detail {

// Lowest eigenvalues of -kappa F'' + V(x) F on [center-L, center+L] with
// Dirichlet boundaries, 3-point stencil, n interior points.
inline std::vector<double> tridiagonal_lowest(double kappa, double center, double half_width,
                                              int n, int count, double quad_coeff) {
  const double h = 2.0 * half_width / (n + 1);
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int s = 0; s < n; ++s) {
    const double x = center - half_width + (s + 1) * h;
    const double dx = x - center;
    diag(s) = 2.0 * kappa / (h * h) + quad_coeff * dx * dx;
  }
  sub.setConstant(-kappa / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> lowest(count);
  for (int s = 0; s < count; ++s) lowest[s] = solver.eigenvalues()(s);
  return lowest;
}

}  // namespace detail

/// Finite-difference oscillator oracle: the lowest `count` level energies
/// for the given lambda, from the discretized 1D equation, Richardson
/// extrapolated across the refinement levels.  Throws GridTooCoarse when
/// successive refinements do not contract at second order.
inline std::vector<double> landau_oracle(double b, double p_y, double p_z, int lambda,
                                         const PhysicalConstants& k, bool relativistic,
                                         int count, const LandauGridOptions& opt = {}) {
  LandauParams probe{b, p_y, p_z, 0, lambda};
  validate(probe);
  if (count < 1 || count > 10) throw Error("oracle supports 1..10 levels");

  const double osc_length = std::sqrt(k.hbar * k.c / (std::abs(k.e) * b));
  const double center = k.c * p_y / (k.e * b);
  const double half_width = opt.half_width * osc_length;

  double kappa, quad;
  if (relativistic) {
    kappa = 1.0;
    quad = std::pow(k.e * b / (k.hbar * k.c), 2);
  } else {
    kappa = k.hbar * k.hbar / (2.0 * k.m);
    quad = 0.5 * k.m * std::pow(k.e * b / (k.m * k.c), 2);
  }

  std::vector<std::vector<double>> levels;
  for (int l = 0; l < opt.levels; ++l) {
    const int n = ((opt.base_points + 1) << l) - 1;  // halves h exactly
    levels.push_back(detail::tridiagonal_lowest(kappa, center, half_width, n, count, quad));
  }

  std::vector<double> out(count);
  for (int idx = 0; idx < count; ++idx) {
    const int last = opt.levels - 1;
    double fine = levels[last][idx];
    double mid = levels[last - 1][idx];
    const double scale = std::max(1.0, std::abs(fine));
    if (opt.levels >= 3) {
      const double coarse = levels[last - 2][idx];
      const double d1 = coarse - mid;
      const double d2 = mid - fine;
      if (std::abs(d2) > opt.converged_tol * scale) {
        const double ratio = d1 / d2;
        if (ratio < opt.ratio_low || ratio > opt.ratio_high) {
          throw GridTooCoarse("refinement ratio outside the second-order window");
        }
      }
    }
    double value = fine + (fine - mid) / 3.0;  // h^2 term cancelled
    if (relativistic) {
      const double e_sq = k.hbar * k.hbar * k.c * k.c * value + p_z * p_z * k.c * k.c +
                          k.m * k.m * std::pow(k.c, 4) - lambda * k.e * b * k.hbar * k.c;
      value = std::sqrt(e_sq);
    } else {
      value = value + p_z * p_z / (2.0 * k.m) - lambda * k.hbar * k.e * b / (2.0 * k.m * k.c);
    }
    out[idx] = value;
  }
  return out;
}

}  // namespace octon
