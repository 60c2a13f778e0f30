// Command-line harness for the octon algebra kernel: verification suites,
// magnetic-level spectrum tables, dispersion scans and quantum-field
// evaluation, with machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 any check failed or a domain error
// surfaced, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octon/landau.hpp"
#include "octon/serialization.hpp"
#include "octon/verify.hpp"

namespace {

using namespace octon;

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("OCTONQM_OUT_DIR")) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

std::optional<BasisElement> basis_by_label(const std::string& label) {
  for (auto e : kAllBasisElements) {
    if (label == basis_label(e)) return e;
  }
  return std::nullopt;
}

// Amplitude syntax: either a JSON array of eight [re, im] pairs, or a sum of
// terms like "1 + 2i - 0.5K + 3xiJ" (a real factor, an optional xi for the
// imaginary unit, and a basis label; a bare coefficient is the scalar slot).
Octon parse_amplitude(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    return octon_from_json(nlohmann::json::parse(text));
  }
  static const std::regex term_re(
      R"(([+-]?)\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?\s*(xi)?\s*(1|i|j|k|E|I|J|K)?)");
  Octon out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), term_re);
  auto end = std::sregex_iterator();
  bool matched_any = false;
  for (auto it = begin; it != end; ++it) {
    const std::smatch& m = *it;
    if (m[0].str().find_first_not_of(" \t") == std::string::npos) continue;
    if (m[2].str().empty() && m[3].str().empty() && m[4].str().empty()) continue;
    matched_any = true;
    double value = m[2].str().empty() ? 1.0 : std::stod(m[2].str());
    if (m[1].str() == "-") value = -value;
    Complex coeff = m[3].str().empty() ? Complex(value, 0.0) : Complex(0.0, value);
    BasisElement e = BasisElement::One;
    if (!m[4].str().empty()) e = *basis_by_label(m[4].str());
    out += coeff * Octon::unit(e);
  }
  if (!matched_any) throw Error("could not parse amplitude: " + text);
  return out;
}

void write_report_files(const VerificationReport& report, const std::string& json_path,
                        const std::string& csv_path) {
  if (!json_path.empty()) {
    std::ofstream os(resolve_output(json_path));
    write_ndjson(report, os);
  }
  if (!csv_path.empty()) {
    std::ofstream os(resolve_output(csv_path));
    write_csv(report, os);
  }
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& json_path,
               const std::string& csv_path, bool quiet) {
  VerificationReport report = run_suite(suite, opt);
  write_report_files(report, json_path, csv_path);
  if (!quiet) {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "pass" : "FAIL") << "  " << c.id;
      if (!c.note.empty()) std::cout << "  [" << c.note << "]";
      std::cout << "\n";
      if (!c.passed) {
        std::cout << "      residual " << c.max_residual << " > tolerance " << c.tolerance;
        if (!c.counterexample.is_null()) {
          std::cout << "  counterexample " << c.counterexample.dump();
        }
        std::cout << "\n";
      }
    }
  }
  std::cout << "suite " << report.suite << ": " << report.passed_count() << "/"
            << report.checks.size() << " checks passed (seed " << report.seed << ")\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_spectrum(double b, double py, double pz, double charge, double mass, int nmax,
                 bool relativistic, bool with_oracle, const std::string& csv_path) {
  PhysicalConstants k;
  k.e = charge;
  k.m = mass;
  std::ostringstream csv;
  csv << "n,lambda,pz[nat],B[nat],E_closed[nat],E_oracle[nat],rel_error\n";
  bool ok = true;
  std::vector<double> oracle_plus, oracle_minus;
  if (with_oracle) {
    oracle_plus = landau_oracle(b, py, pz, +1, k, relativistic, nmax + 1);
    oracle_minus = landau_oracle(b, py, pz, -1, k, relativistic, nmax + 1);
  }
  for (int n = 0; n <= nmax; ++n) {
    for (int lambda : {+1, -1}) {
      const double closed = landau_spectrum({b, py, pz, n, lambda}, k, relativistic);
      csv << n << ',' << lambda << ',' << pz << ',' << b << ',' << closed << ',';
      if (with_oracle) {
        const double oracle = (lambda > 0 ? oracle_plus : oracle_minus)[n];
        const double rel = std::abs(oracle - closed) / std::max(1.0, std::abs(closed));
        csv << oracle << ',' << rel;
        if (rel > 1e-4) ok = false;
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream os(resolve_output(csv_path));
    os << csv.str();
    std::cout << "wrote " << resolve_output(csv_path).string() << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_dispersion(const std::string& variant, double mass, double pmax, int points,
                   const std::string& csv_path) {
  PhysicalConstants k;
  k.m = mass;
  std::vector<std::pair<std::string, FirstOrderSpec>> specs;
  if (variant == "all") {
    specs = first_order_variants();
  } else {
    specs.push_back({variant, variant_by_name(variant)});
  }
  std::ostringstream csv;
  csv << "variant,E[nat],px[nat],py[nat],pz[nat],abs_det,nullity\n";
  bool ok = true;
  for (const auto& [name, spec] : specs) {
    for (int s = 0; s < points; ++s) {
      const double frac = points == 1 ? 0.0 : static_cast<double>(s) / (points - 1);
      const Real3 p = {pmax * frac, 0.0, 0.5 * pmax * frac};
      for (const auto& root : dispersion_roots(spec, p, k)) {
        const double det = std::abs(first_order_determinant(spec, root.energy, p, k));
        csv << name << ',' << root.energy << ',' << p[0] << ',' << p[1] << ',' << p[2] << ','
            << det << ',' << root.multiplicity << '\n';
        if (root.multiplicity != 4) ok = false;
      }
    }
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream os(resolve_output(csv_path));
    os << csv.str();
    std::cout << "wrote " << resolve_output(csv_path).string() << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_fields(const std::string& amplitude_text, double energy, const std::vector<double>& p,
               double mass, double charge, double phi, const std::vector<double>& a,
               const std::string& variant, bool landau_potentials, double landau_b,
               const std::string& json_path) {
  PhysicalConstants k;
  k.m = mass;
  k.e = charge;
  PlaneWaveState s;
  s.energy = energy;
  s.momentum = {p[0], p[1], p[2]};

  if (!variant.empty()) {
    // Use the first member of the nullspace of the named first-order form.
    const auto basis = nullspace_basis(variant_by_name(variant), s.energy, s.momentum, k);
    if (basis.empty()) {
      std::cerr << "no nullspace at this energy and momentum; choose an on-shell pair\n";
      return 1;
    }
    s.amplitude = basis.front();
  } else {
    s.amplitude = parse_amplitude(amplitude_text);
  }

  Potentials pot = Potentials::none();
  if (landau_potentials) {
    pot = Potentials::homogeneous_field_gauge(landau_b);
  } else if (phi != 0.0 || a[0] != 0.0 || a[1] != 0.0 || a[2] != 0.0) {
    pot = Potentials::constant(phi, {a[0], a[1], a[2]});
  }

  const FieldSet fields = fields_from_state(s, k, pot);
  const FieldSystemResiduals residuals = field_system_residual(s, k, pot);
  const auto [gauge_scalar, gauge_pseudo] = gauge_residual(s, k);
  const PlaneWaveState shifted = shifted_state(s, k, pot);
  const double shell = kg_polynomial(shifted.energy, shifted.momentum, k);

  nlohmann::json out = {
      {"state", to_json(s)},
      {"fields", to_json(fields)},
      {"system_residuals", to_json(residuals)},
      {"gauge_residuals", {to_json(gauge_scalar), to_json(gauge_pseudo)}},
      {"shell_polynomial", shell},
      {"on_shell", std::abs(shell) <= 1e-12},
  };
  if (json_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream os(resolve_output(json_path));
    os << out.dump(2) << "\n";
    std::cout << "wrote " << resolve_output(json_path).string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octon algebra kernel: verification suites, spectra, dispersion and fields"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "algebra|operators|eigen|representations|transforms|dynamics|fields|all")
      ->check(CLI::IsMember({"algebra", "operators", "eigen", "representations", "transforms",
                             "dynamics", "fields", "all"}));
  std::string verify_json, verify_csv;
  verify->add_option("--json", verify_json, "write the newline-delimited JSON report here");
  verify->add_option("--csv", verify_csv, "write the CSV report here");
  std::uint64_t seed = 12345;
  verify->add_option("--seed", seed, "seed for randomized checks (recorded in the report)");
  bool quiet = false;
  verify->add_flag("--summary-only", quiet, "print only the summary line");
  bool quick = false;
  verify->add_flag("--quick", quick, "reduce sample counts for a fast pass");
  std::string inject_flip;
  verify
      ->add_option("--inject-flip", inject_flip,
                   "testing aid: flip one product-table cell, e.g. i,j")
      ->group("testing");
  std::string inject_entry;
  verify
      ->add_option("--inject-entry", inject_entry,
                   "testing aid: flip one generated matrix entry, e.g. I,2,3")
      ->group("testing");

  // spectrum ----------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "magnetic level spectrum table");
  double b = 1.0, py = 0.0, pz = 0.0, charge = -1.0, mass = 1.0;
  int nmax = 2;
  bool relativistic = false, with_oracle = false;
  std::string spectrum_csv;
  spectrum->add_option("--B", b, "field magnitude (natural units)")->check(CLI::PositiveNumber);
  spectrum->add_option("--py", py, "transverse motion integral");
  spectrum->add_option("--pz", pz, "longitudinal momentum");
  spectrum->add_option("--charge", charge, "particle charge (negative for the electron)");
  spectrum->add_option("--mass", mass, "particle mass");
  spectrum->add_option("--nmax", nmax, "highest level index")->check(CLI::Range(0, 10));
  spectrum->add_flag("--relativistic", relativistic, "use the relativistic branch");
  spectrum->add_flag("--with-oracle", with_oracle,
                     "add finite-difference oracle and relative-error columns");
  spectrum->add_option("--csv", spectrum_csv, "write the table here instead of stdout");

  // dispersion --------------------------------------------------------------
  auto* dispersion = app.add_subcommand("dispersion", "dispersion scan of a first-order form");
  std::string variant = "a1";
  dispersion->add_option("--variant", variant, "a1..a4, b1..b4, c1, c2 or all")
      ->check(CLI::IsMember({"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "all"}));
  double disp_mass = 1.0, pmax = 3.0;
  int points = 7;
  std::string dispersion_csv;
  dispersion->add_option("--mass", disp_mass, "particle mass");
  dispersion->add_option("--pmax", pmax, "largest momentum magnitude in the scan");
  dispersion->add_option("--points", points, "number of scan points")->check(CLI::Range(1, 1000));
  dispersion->add_option("--csv", dispersion_csv, "write the scan here instead of stdout");

  // fields ------------------------------------------------------------------
  auto* fields = app.add_subcommand("fields", "quantum fields of a plane-wave state");
  std::string amplitude = "1";
  double energy = 1.0;
  std::vector<double> momentum = {0.0, 0.0, 0.0};
  std::vector<double> vecpot = {0.0, 0.0, 0.0};
  double field_mass = 1.0, field_charge = -1.0, phi = 0.0;
  std::string fields_json, nullspace_variant;
  bool landau_pot = false;
  double landau_b = 1.0;
  fields->add_option("--amplitude", amplitude,
                     "octon amplitude: JSON pairs or a term sum like '1+2i-0.5K'");
  fields->add_option("--energy", energy, "plane-wave energy");
  fields->add_option("--p", momentum, "momentum components")->expected(3);
  fields->add_option("--mass", field_mass, "particle mass");
  fields->add_option("--charge", field_charge, "particle charge");
  fields->add_option("--phi", phi, "constant scalar potential");
  fields->add_option("--A", vecpot, "constant vector potential components")->expected(3);
  fields->add_option("--from-nullspace", nullspace_variant,
                     "take the amplitude from the nullspace of this first-order form");
  fields->add_flag("--landau-potentials", landau_pot,
                   "use the homogeneous-field gauge (rejected by the plane-wave backend)");
  fields->add_option("--landau-B", landau_b, "field magnitude for --landau-potentials");
  fields->add_option("--json", fields_json, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteOptions opt;
      opt.seed = seed;
      if (quick) {
        opt.transform_samples = 100;
        opt.representation_samples = 10;
        opt.dispersion_momenta = 5;
        opt.field_samples = 20;
        opt.einstein_samples = 100;
        opt.landau_max_level = 2;
        opt.em_grid_sizes = {12, 24};
      }
      if (!inject_flip.empty()) {
        const auto comma = inject_flip.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--inject-flip", "expected L,R");
        const auto l = basis_by_label(inject_flip.substr(0, comma));
        const auto r = basis_by_label(inject_flip.substr(comma + 1));
        if (!l || !r) throw CLI::ValidationError("--inject-flip", "unknown basis label");
        opt.flip_product_cell = {{*l, *r}};
      }
      if (!inject_entry.empty()) {
        std::istringstream is(inject_entry);
        std::string op_label, row_s, col_s;
        std::getline(is, op_label, ',');
        std::getline(is, row_s, ',');
        std::getline(is, col_s, ',');
        const auto e = basis_by_label(op_label);
        if (!e || row_s.empty() || col_s.empty()) {
          throw CLI::ValidationError("--inject-entry", "expected OP,ROW,COL");
        }
        opt.flip_generated_entry =
            SuiteOptions::ListingFlip{*e, std::stoi(row_s), std::stoi(col_s)};
      }
      return cmd_verify(suite, opt, verify_json, verify_csv, quiet);
    }
    if (*spectrum) {
      if (with_oracle && nmax > 10) {
        std::cerr << "oracle columns support nmax <= 10\n";
        return 2;
      }
      return cmd_spectrum(b, py, pz, charge, mass, nmax, relativistic, with_oracle,
                          spectrum_csv);
    }
    if (*dispersion) {
      return cmd_dispersion(variant, disp_mass, pmax, points, dispersion_csv);
    }
    if (*fields) {
      return cmd_fields(amplitude, energy, momentum, field_mass, field_charge, phi, vecpot,
                        nullspace_variant, landau_pot, landau_b, fields_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
