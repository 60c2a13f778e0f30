#pragma once

// JSON forms of the domain types.  An octon is an ordered array of eight
// [re, im] pairs in canonical order; operators are 8x8 arrays of pairs;
// bases and transforms carry their defining parameters so reports are
// reproducible.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "octon/algebra.hpp"
#include "octon/eigen.hpp"
#include "octon/field_grid.hpp"
#include "octon/operators.hpp"
#include "octon/planewave.hpp"
#include "octon/quantum_fields.hpp"
#include "octon/representations.hpp"
#include "octon/transforms.hpp"

namespace octon {

inline nlohmann::json to_json(Complex v) { return nlohmann::json::array({v.real(), v.imag()}); }

inline Complex complex_from_json(const nlohmann::json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

inline nlohmann::json to_json(const Octon& a) {
  nlohmann::json j = nlohmann::json::array();
  for (int s = 0; s < 8; ++s) j.push_back(to_json(a[s]));
  return j;
}

inline Octon octon_from_json(const nlohmann::json& j) {
  Octon a;
  for (int s = 0; s < 8; ++s) a[s] = complex_from_json(j.at(s));
  return a;
}

inline nlohmann::json to_json(const OctonOperator& op) {
  nlohmann::json j = nlohmann::json::array();
  for (int s = 0; s < 8; ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < 8; ++t) row.push_back(to_json(op(s, t)));
    j.push_back(row);
  }
  return j;
}

inline OctonOperator operator_from_json(const nlohmann::json& j) {
  OctonOperator op;
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) op.at(s, t) = complex_from_json(j.at(s).at(t));
  return op;
}

inline nlohmann::json to_json(const EigenSystem& sys) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : sys.pairs) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : p.basis) basis.push_back(to_json(v));
    pairs.push_back({{"eigenvalue", to_json(p.eigenvalue)},
                     {"multiplicity", p.multiplicity},
                     {"basis", basis}});
  }
  return {{"pairs", pairs}};
}

inline nlohmann::json to_json(const RepresentationBasis& rep) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : rep.basis) basis.push_back(to_json(v));
  nlohmann::json params = nlohmann::json::array();
  for (const auto& v : rep.parameters) params.push_back(to_json(v));
  return {{"label", representation_label_name(rep.label)},
          {"basis", basis},
          {"parameters", params}};
}

inline nlohmann::json to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    j.push_back(row);
  }
  return j;
}

inline nlohmann::json to_json(const Rotor& r) {
  return {{"axis", {r.axis[0], r.axis[1], r.axis[2]}}, {"angle", r.angle}};
}

inline nlohmann::json to_json(const LorentzBoost& b) {
  return {{"axis", {b.axis[0], b.axis[1], b.axis[2]}}, {"rapidity", b.rapidity}};
}

inline nlohmann::json to_json(const FieldSet& f) {
  return {{"e", to_json(f.e)},
          {"E", {to_json(f.electric[0]), to_json(f.electric[1]), to_json(f.electric[2])}},
          {"h", to_json(f.h)},
          {"H", {to_json(f.magnetic[0]), to_json(f.magnetic[1]), to_json(f.magnetic[2])}}};
}

inline nlohmann::json to_json(const FieldSystemResiduals& r) {
  return {{"scalar", to_json(r.scalar)},
          {"pseudoscalar", to_json(r.pseudoscalar)},
          {"vector", {to_json(r.vector[0]), to_json(r.vector[1]), to_json(r.vector[2])}},
          {"pseudovector",
           {to_json(r.pseudovector[0]), to_json(r.pseudovector[1]), to_json(r.pseudovector[2])}}};
}

inline nlohmann::json to_json(const PlaneWaveState& s) {
  return {{"energy", s.energy},
          {"momentum", {s.momentum[0], s.momentum[1], s.momentum[2]}},
          {"amplitude", to_json(s.amplitude)}};
}

/// Grid fields persist as a one-line JSON header (shape, spacing, units)
/// followed by flat little-endian doubles: the octon field (16 per site),
/// the scalar potential, then the vector potential (3 per site).
inline void save_grid(const SampledGrid& g, std::ostream& os) {
  nlohmann::json header = {{"format", "octon-grid"},   {"version", 1},
                           {"n", g.spec.n},            {"nt", g.spec.nt},
                           {"length", g.spec.length},  {"h", g.h},
                           {"dt", g.dt},               {"units", "natural"}};
  os << header.dump() << '\n';
  auto put = [&os](double v) { os.write(reinterpret_cast<const char*>(&v), sizeof(double)); };
  for (const auto& o : g.psi) {
    for (int s = 0; s < 8; ++s) {
      put(o[s].real());
      put(o[s].imag());
    }
  }
  for (double v : g.phi) put(v);
  for (const auto& v : g.a) {
    put(v[0]);
    put(v[1]);
    put(v[2]);
  }
}

inline SampledGrid load_grid(std::istream& is) {
  std::string line;
  std::getline(is, line);
  const nlohmann::json header = nlohmann::json::parse(line);
  if (header.at("format") != "octon-grid") throw Error("not a grid field file");
  SampledGrid g;
  g.spec.n = header.at("n").get<int>();
  g.spec.nt = header.at("nt").get<int>();
  g.spec.length = header.at("length").get<double>();
  g.h = header.at("h").get<double>();
  g.dt = header.at("dt").get<double>();
  const std::size_t total = static_cast<std::size_t>(g.spec.nt) * g.site_count();
  g.psi.resize(total);
  g.phi.resize(total);
  g.a.resize(total);
  auto get = [&is]() {
    double v;
    is.read(reinterpret_cast<char*>(&v), sizeof(double));
    return v;
  };
  for (auto& o : g.psi) {
    for (int s = 0; s < 8; ++s) {
      const double re = get();
      const double im = get();
      o[s] = Complex(re, im);
    }
  }
  for (auto& v : g.phi) v = get();
  for (auto& v : g.a) {
    v[0] = get();
    v[1] = get();
    v[2] = get();
  }
  if (!is) throw Error("truncated grid field file");
  return g;
}

}  // namespace octon
