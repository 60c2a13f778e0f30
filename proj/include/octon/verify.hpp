#pragma once

// Verification suites: every table, matrix listing, eigenbasis, projector,
// transform identity, factorization, spectrum and field equation is checked
// here and recorded as a report entry.  Listing mismatches at the known
// transcription slips pass with a note naming the cells; everything else
// must match exactly or within the stated tolerance.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "octon/algebra.hpp"
#include "octon/eigen.hpp"
#include "octon/errors.hpp"
#include "octon/field_grid.hpp"
#include "octon/landau.hpp"
#include "octon/operators.hpp"
#include "octon/planewave.hpp"
#include "octon/quantum_fields.hpp"
#include "octon/reference_tables.hpp"
#include "octon/report.hpp"
#include "octon/representations.hpp"
#include "octon/serialization.hpp"
#include "octon/transforms.hpp"
#include "octon/wave_equations.hpp"

namespace octon {

struct SuiteOptions {
  std::uint64_t seed = 12345;
  int algebra_samples = 50;
  int transform_samples = 1000;
  int representation_samples = 100;
  int dispersion_momenta = 50;
  int field_samples = 200;
  int einstein_samples = 1000;
  int landau_max_level = 5;
  std::vector<int> em_grid_sizes = {16, 32};

  // Fault injection for negative controls (test fixtures).
  std::optional<std::pair<BasisElement, BasisElement>> flip_product_cell;
  struct ListingFlip {
    BasisElement element;
    int row;
    int col;
  };
  std::optional<ListingFlip> flip_generated_entry;
};

namespace verify_detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  Complex complex_value(double scale = 1.0) { return Complex(real(), real()) * scale; }

  Octon octon_value() {
    Octon a;
    for (int s = 0; s < 8; ++s) a[s] = complex_value();
    return a;
  }

  Axis axis() {
    while (true) {
      Axis n = {real(), real(), real()};
      const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      if (len > 0.2) {
        for (auto& v : n) v /= len;
        return n;
      }
    }
  }

  Real3 momentum(double scale = 2.0) {
    return {real() * scale, real() * scale, real() * scale};
  }

 private:
  std::mt19937_64 engine_;
};

// Basis product with an optional injected sign flip (negative-control path).
inline Octon multiply_checked(const Octon& a, const Octon& b, const SuiteOptions& opt) {
  Octon r = multiply(a, b);
  if (opt.flip_product_cell) {
    const auto [l, rr] = *opt.flip_product_cell;
    const Complex contrib = a[static_cast<int>(l)] * b[static_cast<int>(rr)];
    if (contrib != Complex{}) {
      const auto [coeff, basis] = basis_product(l, rr);
      r[static_cast<int>(basis)] -= 2.0 * contrib * coeff;
    }
  }
  return r;
}

struct Check {
  std::string id;
  std::string description;
  double tolerance = 0.0;
  double worst = 0.0;
  bool failed = false;
  std::string note;
  nlohmann::json counterexample;

  void observe(double residual, const std::function<nlohmann::json()>& payload = {}) {
    if (residual > worst) worst = residual;
    if (residual > tolerance && !failed) {
      failed = true;
      if (payload) counterexample = payload();
    }
  }

  void expect(bool ok, const std::function<nlohmann::json()>& payload = {}) {
    observe(ok ? 0.0 : 1.0, payload);
  }

  CheckResult result() const {
    if (failed) return CheckResult::fail(id, description, worst, tolerance, counterexample, note);
    return CheckResult::pass(id, description, worst, tolerance, note);
  }
};

inline Octon basis_octon(BasisElement e) { return Octon::unit(e); }

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// algebra suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_algebra(const SuiteOptions& opt = {}) {
  using namespace verify_detail;
  VerificationReport report;
  report.suite = "algebra";
  report.seed = opt.seed;
  Rng rng(opt.seed);

  {
    Check c{"algebra/product-table", "all 64 basis products match the multiplication table", 0.0};
    for (auto a : kAllBasisElements) {
      for (auto b : kAllBasisElements) {
        const auto [coeff, basis] = basis_product(a, b);
        const Octon expected = coeff * Octon::unit(basis);
        const Octon got = multiply_checked(Octon::unit(a), Octon::unit(b), opt);
        c.observe(max_abs_diff(got, expected), [&] {
          return nlohmann::json{{"left", basis_label(a)}, {"right", basis_label(b)}};
        });
      }
    }
    report.add(c.result());
  }

  {
    Check c{"algebra/associativity", "all 512 ordered basis triples associate exactly", 0.0};
    for (auto a : kAllBasisElements)
      for (auto b : kAllBasisElements)
        for (auto d : kAllBasisElements) {
          const Octon lhs = multiply_checked(
              multiply_checked(Octon::unit(a), Octon::unit(b), opt), Octon::unit(d), opt);
          const Octon rhs = multiply_checked(
              Octon::unit(a), multiply_checked(Octon::unit(b), Octon::unit(d), opt), opt);
          c.observe(max_abs_diff(lhs, rhs), [&] {
            return nlohmann::json{
                {"triple", {basis_label(a), basis_label(b), basis_label(d)}}};
          });
        }
    report.add(c.result());
  }

  {
    Check c{"algebra/closure", "every basis product is +/-1 or +/-xi times a basis element", 0.0};
    for (auto a : kAllBasisElements)
      for (auto b : kAllBasisElements) {
        const Octon p = multiply(Octon::unit(a), Octon::unit(b));
        int nonzero = 0;
        bool unit_coeff = true;
        for (int s = 0; s < 8; ++s) {
          if (p[s] == Complex{}) continue;
          ++nonzero;
          unit_coeff = unit_coeff && (p[s] == Complex(1, 0) || p[s] == Complex(-1, 0) ||
                                      p[s] == xi || p[s] == -xi);
        }
        c.expect(nonzero == 1 && unit_coeff, [&] {
          return nlohmann::json{{"left", basis_label(a)}, {"right", basis_label(b)}};
        });
      }
    report.add(c.result());
  }

  {
    Check c{"algebra/identity-element", "the scalar unit is a two-sided identity", 0.0};
    const Octon one = Octon::unit(BasisElement::One);
    for (auto e : kAllBasisElements) {
      c.observe(max_abs_diff(multiply(one, Octon::unit(e)), Octon::unit(e)));
      c.observe(max_abs_diff(multiply(Octon::unit(e), one), Octon::unit(e)));
    }
    report.add(c.result());
  }

  {
    Check c{"algebra/pseudoscalar-construction",
            "the pseudoscalar unit equals -xi times the ordered polar product and squares to one",
            0.0};
    const Octon ijk = multiply(multiply(Octon::unit(BasisElement::i), Octon::unit(BasisElement::j)),
                               Octon::unit(BasisElement::k));
    c.observe(max_abs_diff(-xi * ijk, Octon::unit(BasisElement::E)));
    c.observe(max_abs_diff(multiply(Octon::unit(BasisElement::E), Octon::unit(BasisElement::E)),
                           Octon::unit(BasisElement::One)));
    report.add(c.result());
  }

  {
    Check c{"algebra/commutation-witnesses",
            "polar units anticommute pairwise; the pseudoscalar unit commutes with everything",
            0.0};
    const Octon vi = Octon::unit(BasisElement::i), vj = Octon::unit(BasisElement::j);
    c.observe(max_abs_diff(multiply(vi, vj), -multiply(vj, vi)));
    const Octon e = Octon::unit(BasisElement::E);
    for (auto b : kAllBasisElements) {
      c.observe(max_abs_diff(multiply(e, Octon::unit(b)), multiply(Octon::unit(b), e)));
    }
    report.add(c.result());
  }

  {
    Check c{"algebra/grade-partition", "the four grade projections sum to the input", 0.0};
    for (int s = 0; s < opt.algebra_samples; ++s) {
      const Octon a = rng.octon_value();
      Octon sum;
      for (auto g : {Grade::Scalar, Grade::Vector, Grade::Pseudoscalar, Grade::Pseudovector}) {
        sum += grade_project(a, g);
      }
      c.observe(max_abs_diff(sum, a));
    }
    const Octon mixed = Octon::unit(BasisElement::One) + 2.0 * Octon::unit(BasisElement::i) +
                        3.0 * Octon::unit(BasisElement::E) + 4.0 * Octon::unit(BasisElement::K);
    c.observe(max_abs_diff(grade_project(mixed, Grade::Vector), 2.0 * Octon::unit(BasisElement::i)));
    c.observe(max_abs_diff(
        grade_project(multiply(Octon::unit(BasisElement::i), Octon::unit(BasisElement::I)),
                      Grade::Pseudoscalar),
        Octon::unit(BasisElement::E)));
    report.add(c.result());
  }

  {
    Check c{"algebra/split-products",
            "symmetric and antisymmetric parts sum to the product; polar pairs give dot and cross",
            1e-12};
    for (int s = 0; s < opt.algebra_samples; ++s) {
      const Octon a = rng.octon_value();
      const Octon b = rng.octon_value();
      c.observe(max_abs_diff(symmetric_product(a, b) + antisymmetric_product(a, b),
                             multiply(a, b)));
      c.observe(antisymmetric_product(a, a).max_norm());
    }
    for (int s = 0; s < opt.algebra_samples; ++s) {
      const double ax = rng.real(), ay = rng.real(), az = rng.real();
      const double bx = rng.real(), by = rng.real(), bz = rng.real();
      const Octon a = Octon::polar(ax, ay, az);
      const Octon b = Octon::polar(bx, by, bz);
      const Octon cross = xi * Octon::axial(ay * bz - az * by, az * bx - ax * bz,
                                            ax * by - ay * bx);
      c.observe(max_abs_diff(antisymmetric_product(a, b), cross));
      c.observe(max_abs_diff(symmetric_product(a, b),
                             Octon::scalar(ax * bx + ay * by + az * bz)));
    }
    const Octon k7 = Octon::unit(BasisElement::K);
    const Octon i1 = Octon::unit(BasisElement::i);
    c.observe(max_abs_diff(antisymmetric_product(k7, i1), xi * Octon::unit(BasisElement::j)));
    c.observe(symmetric_product(Octon::unit(BasisElement::i), Octon::unit(BasisElement::j))
                  .max_norm());
    report.add(c.result());
  }

  {
    Check c{"algebra/conjugation", "coefficient conjugation is an involution fixing the basis",
            1e-12};
    for (int s = 0; s < opt.algebra_samples; ++s) {
      const Octon a = rng.octon_value();
      c.observe(max_abs_diff(complex_conjugate(complex_conjugate(a)), a));
    }
    c.observe(max_abs_diff(complex_conjugate(xi * Octon::unit(BasisElement::One)),
                           -xi * Octon::unit(BasisElement::One)));
    const double theta = 0.7;
    const Octon u = Octon::scalar(std::cos(theta / 2)) +
                    xi * std::sin(theta / 2) * Octon::unit(BasisElement::K);
    c.observe(max_abs_diff(complex_conjugate(u),
                           Octon::scalar(std::cos(theta / 2)) -
                               xi * std::sin(theta / 2) * Octon::unit(BasisElement::K)));
    report.add(c.result());
  }

  {
    Check c{"algebra/rotor-normalization",
            "conj(U) U = 1 for rotation octons over random axes and angles", 1e-12};
    for (int s = 0; s < opt.algebra_samples; ++s) {
      Rotor r{rng.axis(), rng.real(-6.0, 6.0)};
      const Octon u = rotor_octon(r);
      c.observe(max_abs_diff(multiply(complex_conjugate(u), u), Octon::unit(BasisElement::One)));
    }
    report.add(c.result());
  }

  {
    Check c{"algebra/linear-combine", "componentwise linear combination, empty sum is zero", 0.0};
    c.observe(linear_combine({}).max_norm());
    const Octon vi = Octon::unit(BasisElement::i), vj = Octon::unit(BasisElement::j);
    c.observe(max_abs_diff(linear_combine({{Complex(1, 0), vi}, {Complex(1, 0), vj}}), vi + vj));
    const Octon onek = Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K);
    c.observe(max_abs_diff(linear_combine({{Complex(0.5, 0), onek}}), 0.5 * onek));
    report.add(c.result());
  }

  {
    Check c{"algebra/serialization-roundtrip", "octon JSON form round-trips exactly", 0.0};
    for (int s = 0; s < opt.algebra_samples; ++s) {
      const Octon a = rng.octon_value();
      c.observe(max_abs_diff(octon_from_json(to_json(a)), a));
    }
    report.add(c.result());
  }

  {
    Check c{"algebra/left-action-column",
            "the listed action column of the first polar operator matches the table-generated one",
            0.0};
    c.note = "listed slots 6 and 7 carry the known transcription slip";
    Octon generic;
    for (int s = 0; s < 8; ++s) generic[s] = Complex(s + 1, 0.25 * s);
    const Octon got = multiply(Octon::unit(BasisElement::i), generic);
    for (int s = 0; s < 8; ++s) {
      const auto& entry = reference::kListedOpIColumn[s];
      const Complex listed = reference::decode_entry(entry.coeff) * generic[entry.source];
      const bool known = std::find(reference::known_column_discrepancies().begin(),
                                   reference::known_column_discrepancies().end(),
                                   s) != reference::known_column_discrepancies().end();
      if (known) {
        c.expect(got[s] != listed,
                 [&] { return nlohmann::json{{"slot", s}, {"unexpectedly-matching", true}}; });
      } else {
        c.observe(std::abs(got[s] - listed), [&] { return nlohmann::json{{"slot", s}}; });
      }
    }
    report.add(c.result());
  }

  report.sort_by_id();
  return report;
}

// ---------------------------------------------------------------------------
// operator tables (the 64 + 49 + 49 + 1 cross-check) and the wider suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_operator_tables(const SuiteOptions& opt = {}) {
  using namespace verify_detail;
  VerificationReport report;
  report.suite = "operator-tables";
  report.seed = opt.seed;

  // 64 matrix-listing checks: one per (operator, column) over the eight
  // basis operators, with the scalar unit contributing the trivial identity.
  for (auto e : kAllBasisElements) {
    OctonOperator generated = left_multiplication_operator(e);
    if (opt.flip_generated_entry && opt.flip_generated_entry->element == e) {
      auto& v = generated.at(opt.flip_generated_entry->row, opt.flip_generated_entry->col);
      v = (v == Complex{}) ? Complex(1, 0) : -v;
    }
    OctonOperator listed = OctonOperator::identity();
    std::vector<reference::KnownCell> known;
    if (e != BasisElement::One) {
      for (const auto& lo : reference::listed_basis_operators()) {
        if (lo.element == e) listed = reference::decode_matrix(*lo.matrix);
      }
      for (const auto& cell : reference::known_listing_discrepancies()) {
        if (cell.element == e) known.push_back(cell);
      }
    }
    for (int col = 0; col < 8; ++col) {
      std::ostringstream id;
      id << "operators/matrix-listing/" << basis_label(e) << "/col" << col;
      Check c{id.str(), "generated operator column matches the listed matrix form", 0.0};
      bool any_known = false;
      for (int row = 0; row < 8; ++row) {
        const bool cell_known =
            std::any_of(known.begin(), known.end(), [&](const reference::KnownCell& kc) {
              return kc.row == row && kc.col == col;
            });
        const double diff = std::abs(generated(row, col) - listed(row, col));
        if (cell_known) {
          any_known = true;
          c.expect(diff > 0.5, [&] {
            return nlohmann::json{{"row", row}, {"col", col}, {"unexpectedly-matching", true}};
          });
        } else {
          c.observe(diff, [&] {
            return nlohmann::json{{"operator", basis_label(e)}, {"row", row}, {"col", col}};
          });
        }
      }
      if (any_known) c.note = "listed cell(s) in this column carry the known sign slip";
      report.add(c.result());
    }
  }

  // 49 composition checks.
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      const auto sa = kReflectionsAndTurns[a];
      const auto sb = kReflectionsAndTurns[b];
      std::ostringstream id;
      id << "operators/turn-composition/" << discrete_symmetry_label(sa) << "-"
         << discrete_symmetry_label(sb);
      Check c{id.str(), "composition of reflections and turns matches the group table", 0.0};
      const int expected_idx = reference::kTurnCompositionTable[a][b];
      const OctonOperator expected =
          expected_idx < 0 ? OctonOperator::identity()
                           : discrete_symmetry_operator(kReflectionsAndTurns[expected_idx]);
      c.observe(max_abs_diff(
          compose(discrete_symmetry_operator(sa), discrete_symmetry_operator(sb)), expected));
      report.add(c.result());
    }
  }

  // 49 commutation checks against the basis operators.
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      const auto sym = kReflectionsAndTurns[a];
      const BasisElement e = kAllBasisElements[b + 1];
      std::ostringstream id;
      id << "operators/turn-commutation/" << discrete_symmetry_label(sym) << "-"
         << basis_label(e);
      Check c{id.str(), "commutation sign against the basis operator matches the table", 0.0};
      const CommutationKind got = commutation_sign(discrete_symmetry_operator(sym),
                                                   left_multiplication_operator(e));
      const CommutationKind expected = reference::kTurnCommutationTable[a][b] > 0
                                           ? CommutationKind::Commute
                                           : CommutationKind::Anticommute;
      c.expect(got == expected, [&] {
        return nlohmann::json{{"symmetry", discrete_symmetry_label(sym)},
                              {"operator", basis_label(e)}};
      });
      report.add(c.result());
    }
  }

  {
    Check c{"operators/inversion-composition",
            "spatial inversion equals the composition of the three reflections", 0.0};
    const OctonOperator rxyz = compose(
        compose(discrete_symmetry_operator(DiscreteSymmetry::Rx),
                discrete_symmetry_operator(DiscreteSymmetry::Ry)),
        discrete_symmetry_operator(DiscreteSymmetry::Rz));
    c.observe(max_abs_diff(rxyz, inversion_operator()));
    report.add(c.result());
  }

  report.sort_by_id();
  return report;
}

inline VerificationReport verify_operators(const SuiteOptions& opt = {}) {
  using namespace verify_detail;
  VerificationReport report = verify_operator_tables(opt);
  report.suite = "operators";
  Rng rng(opt.seed);

  {
    Check c{"operators/left-action-agreement",
            "basis operator matrices act exactly as left multiplication", 0.0};
    for (auto e : kAllBasisElements) {
      for (int s = 0; s < 8; ++s) {
        const Octon x = rng.octon_value();
        c.observe(max_abs_diff(apply(left_multiplication_operator(e), x),
                               multiply(Octon::unit(e), x)));
      }
    }
    report.add(c.result());
  }

  {
    Check c{"operators/composition-homomorphism",
            "operator composition mirrors the basis product", 0.0};
    for (auto a : kAllBasisElements)
      for (auto b : kAllBasisElements) {
        const auto [coeff, basis] = basis_product(a, b);
        c.observe(max_abs_diff(
            compose(left_multiplication_operator(a), left_multiplication_operator(b)),
            coeff * left_multiplication_operator(basis)));
      }
    report.add(c.result());
  }

  {
    Check c{"operators/basis-squares", "every non-scalar basis operator squares to the identity",
            0.0};
    for (auto e : kAllBasisElements) {
      if (e == BasisElement::One) continue;
      const OctonOperator op = left_multiplication_operator(e);
      c.observe(max_abs_diff(compose(op, op), OctonOperator::identity()));
    }
    report.add(c.result());
  }

  {
    Check c{"operators/inversion-action",
            "inversion flips vector and pseudoscalar components only and is an involution", 0.0};
    const OctonOperator r = inversion_operator();
    Octon full;
    for (int s = 0; s < 8; ++s) full[s] = Complex(1 + s, 0);
    Octon expected = full;
    for (int s = 1; s <= 4; ++s) expected[s] = -expected[s];
    c.observe(max_abs_diff(apply(r, full), expected));
    c.observe(max_abs_diff(compose(r, r), OctonOperator::identity()));
    report.add(c.result());
  }

  {
    Check c{"operators/inversion-commutation",
            "inversion anticommutes with polar and pseudoscalar operators, commutes with axial",
            0.0};
    const OctonOperator r = inversion_operator();
    for (auto e : {BasisElement::i, BasisElement::j, BasisElement::k, BasisElement::E}) {
      c.expect(commutation_sign(r, left_multiplication_operator(e)) ==
               CommutationKind::Anticommute);
    }
    for (auto e : {BasisElement::I, BasisElement::J, BasisElement::K}) {
      c.expect(commutation_sign(r, left_multiplication_operator(e)) == CommutationKind::Commute);
    }
    // Composition order flips the global sign on the polar operators.
    const OctonOperator op_i = left_multiplication_operator(BasisElement::i);
    c.observe(max_abs_diff(compose(r, op_i), -compose(op_i, r)));
    report.add(c.result());
  }

  {
    Check c{"operators/pseudo-inversion-composite",
            "the pseudoscalar-inversion composite anticommutes with the polar operators and "
            "squares to minus the identity",
            0.0};
    const OctonOperator er =
        compose(left_multiplication_operator(BasisElement::E), inversion_operator());
    c.observe(max_abs_diff(compose(er, er), -OctonOperator::identity()));
    for (auto e : {BasisElement::i, BasisElement::j, BasisElement::k}) {
      c.expect(commutation_sign(er, left_multiplication_operator(e)) ==
               CommutationKind::Anticommute);
    }
    c.observe(max_abs_diff(
        er, -compose(inversion_operator(), left_multiplication_operator(BasisElement::E))));
    report.add(c.result());
  }

  {
    Check c{"operators/pseudoscalar-commutes", "the pseudoscalar operator commutes with all basis operators",
            0.0};
    const OctonOperator e = left_multiplication_operator(BasisElement::E);
    for (auto b : kAllBasisElements) {
      c.expect(commutation_sign(e, left_multiplication_operator(b)) == CommutationKind::Commute);
    }
    report.add(c.result());
  }

  {
    Check c{"operators/reflection-action", "the x reflection flips the listed component signs",
            0.0};
    Octon full;
    for (int s = 0; s < 8; ++s) full[s] = Complex(1 + s, 0);
    Octon expected = full;
    for (int s : {1, 4, 6, 7}) expected[s] = -expected[s];
    c.observe(max_abs_diff(apply(discrete_symmetry_operator(DiscreteSymmetry::Rx), full),
                           expected));
    const OctonOperator piz = discrete_symmetry_operator(DiscreteSymmetry::PiZ);
    c.observe(max_abs_diff(apply(piz, Octon::unit(BasisElement::k)),
                           Octon::unit(BasisElement::k)));
    c.observe(max_abs_diff(apply(piz, Octon::unit(BasisElement::i)),
                           -Octon::unit(BasisElement::i)));
    report.add(c.result());
  }

  {
    Check c{"operators/projector-identities",
            "projectors are idempotent, orthogonal in pairs, and pairs sum to the identity", 0.0};
    for (auto kind : kAllProjectors) {
      const OctonOperator p = projector(kind);
      c.observe(max_abs_diff(compose(p, p), p));
    }
    const std::array<std::pair<ProjectorKind, ProjectorKind>, 4> pairs = {{
        {ProjectorKind::ParticlePlus, ProjectorKind::ParticleMinus},
        {ProjectorKind::ParityPlus, ProjectorKind::ParityMinus},
        {ProjectorKind::SpinZPlus, ProjectorKind::SpinZMinus},
        {ProjectorKind::PolarizationPlus, ProjectorKind::PolarizationMinus},
    }};
    for (const auto& [plus, minus] : pairs) {
      c.observe(max_abs_diff(projector(plus) + projector(minus), OctonOperator::identity()));
      c.observe(compose(projector(plus), projector(minus)).max_norm());
      c.observe(compose(projector(minus), projector(plus)).max_norm());
    }
    report.add(c.result());
  }

  {
    Check c{"operators/projector-actions",
            "particle/antiparticle and parity projectors act as the component splits", 1e-12};
    Rng prng(opt.seed + 1);
    for (int s = 0; s < 16; ++s) {
      const Octon psi = prng.octon_value();
      // Particle split: (1 + pseudoscalar)/2 applied, scalar+vector parts fold
      // with pseudoscalar+pseudovector parts.
      const Octon plus = apply(projector(ProjectorKind::ParticlePlus), psi);
      const Octon folded = 0.5 * multiply(Octon::unit(BasisElement::One) +
                                              Octon::unit(BasisElement::E),
                                          psi);
      c.observe(max_abs_diff(plus, folded));
      // Parity split keeps scalar and pseudovector components.
      const Octon par = apply(projector(ProjectorKind::ParityPlus), psi);
      Octon expected;
      expected[0] = psi[0];
      for (int d = 5; d < 8; ++d) expected[d] = psi[d];
      c.observe(max_abs_diff(par, expected));
      const Octon par_minus = apply(projector(ProjectorKind::ParityMinus), psi);
      Octon expected_minus;
      expected_minus[4] = psi[4];
      for (int d = 1; d < 4; ++d) expected_minus[d] = psi[d];
      c.observe(max_abs_diff(par_minus, expected_minus));
    }
    report.add(c.result());
  }

  report.sort_by_id();
  return report;
}

// ---------------------------------------------------------------------------
// eigenstructure suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_eigen(const SuiteOptions& opt = {}) {
  using namespace verify_detail;
  VerificationReport report;
  report.suite = "eigen";
  report.seed = opt.seed;
  Rng rng(opt.seed);

  for (auto kind : kAllEigenOperators) {
    std::ostringstream id;
    id << "eigen/spectrum/" << eigen_operator_label(kind);
    Check c{id.str(), "spectrum is {+1, -1} with multiplicity four each", 1e-10};
    const EigenSystem sys = eigen_decompose(operator_of(kind));
    c.expect(sys.pairs.size() == 2);
    if (sys.pairs.size() == 2) {
      c.observe(std::abs(sys.pairs[0].eigenvalue - Complex(-1, 0)));
      c.observe(std::abs(sys.pairs[1].eigenvalue - Complex(1, 0)));
      c.expect(sys.pairs[0].multiplicity == 4 && sys.pairs[1].multiplicity == 4);
      // Numeric eigenvectors lie in the canonical spans.
      for (int side = 0; side < 2; ++side) {
        const int lambda = side == 0 ? -1 : 1;
        const auto span = canonical_eigenbasis(kind, lambda);
        for (const auto& v : sys.pairs[side].basis) {
          c.observe(subspace_residual(v, span));
        }
      }
    }
    report.add(c.result());
  }

  {
    Check c{"eigen/identity-operator", "the identity has a single unit eigenvalue of full rank",
            1e-10};
    const EigenSystem sys = eigen_decompose(OctonOperator::identity());
    c.expect(sys.pairs.size() == 1 && sys.pairs[0].multiplicity == 8);
    if (!sys.pairs.empty()) c.observe(std::abs(sys.pairs[0].eigenvalue - Complex(1, 0)));
    report.add(c.result());
  }

  {
    Check c{"eigen/canonical-eigenfunctions",
            "all 64 listed eigenfunctions satisfy their eigen relations exactly", 0.0};
    for (auto kind : kAllEigenOperators) {
      if (kind == EigenOperatorKind::TurnZ) continue;  // counted below with combinations
      const OctonOperator op = operator_of(kind);
      for (int lambda : {1, -1}) {
        for (const auto& f : canonical_eigenbasis(kind, lambda)) {
          c.observe(max_abs_diff(apply(op, f), static_cast<double>(lambda) * f), [&] {
            return nlohmann::json{{"operator", eigen_operator_label(kind)},
                                  {"lambda", lambda},
                                  {"function", to_string(f)}};
          });
        }
      }
    }
    report.add(c.result());
  }

  {
    Check c{"eigen/turn-z-eigenfunctions",
            "primary and combination eigenfunctions of the z turn verify exactly", 0.0};
    const OctonOperator op = operator_of(EigenOperatorKind::TurnZ);
    for (int lambda : {1, -1}) {
      for (const auto& f : canonical_eigenbasis(EigenOperatorKind::TurnZ, lambda)) {
        c.observe(max_abs_diff(apply(op, f), static_cast<double>(lambda) * f));
      }
      for (const auto& f : turn_z_combination_eigenbasis(lambda)) {
        c.observe(max_abs_diff(apply(op, f), static_cast<double>(lambda) * f));
      }
    }
    report.add(c.result());
  }

  {
    Check c{"eigen/idempotent-table", "all 16 products of the half-sum eigenfunctions verify",
            0.0};
    const IdempotentTable t = idempotent_table();
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const int expected = t.product_index[a][b];
        const Octon got = multiply(t.elements[a], t.elements[b]);
        const Octon want = expected < 0 ? Octon::zero() : t.elements[expected];
        c.observe(max_abs_diff(got, want),
                  [&] { return nlohmann::json{{"row", a}, {"col", b}}; });
      }
    }
    report.add(c.result());
  }

  {
    Check c{"eigen/general-eigenfunction",
            "arbitrary coefficient combinations satisfy the eigen relation and its component ties",
            1e-12};
    const OctonOperator op = operator_of(EigenOperatorKind::BasisAxialK);
    for (int lambda : {1, -1}) {
      for (int s = 0; s < 20; ++s) {
        const std::array<Complex, 4> f = {rng.complex_value(), rng.complex_value(),
                                          rng.complex_value(), rng.complex_value()};
        const Octon psi = general_eigenfunction(lambda, f);
        c.observe(max_abs_diff(apply(op, psi), static_cast<double>(lambda) * psi));
        const Complex lam(lambda, 0);
        c.observe(std::abs(psi[7] - lam * psi[0]));        // axial-z ties scalar
        c.observe(std::abs(psi[2] - xi * lam * psi[1]));   // polar-y ties polar-x
        c.observe(std::abs(psi[3] - lam * psi[4]));        // polar-z ties pseudoscalar
        c.observe(std::abs(psi[6] - xi * lam * psi[5]));   // axial-y ties axial-x
      }
      c.observe(general_eigenfunction(lambda, {Complex{}, Complex{}, Complex{}, Complex{}})
                    .max_norm());
    }
    const Octon first = general_eigenfunction(+1, {Complex(1, 0), Complex{}, Complex{}, Complex{}});
    c.observe(max_abs_diff(first, Octon::unit(BasisElement::One) + Octon::unit(BasisElement::K)));
    report.add(c.result());
  }

  report.sort_by_id();
  return report;
}

}  // namespace octon

#include "octon/verify_representations.hpp"
#include "octon/verify_dynamics.hpp"
