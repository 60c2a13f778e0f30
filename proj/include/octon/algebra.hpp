#pragma once

// Eight-component hypercomplex values ("octons") over complex coefficients,
// spanned by {1, i, j, k, E, I, J, K}: a scalar, three polar vector units,
// a pseudoscalar and three axial vector units.  The product of any two basis
// elements is +/-1 or +/-xi times a basis element, where xi is the ordinary
// commuting imaginary unit; the resulting algebra is associative and
// noncommutative.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace octon {

using Complex = std::complex<double>;

/// The commuting imaginary unit (written xi throughout; xi^2 = -1).
inline constexpr Complex xi{0.0, 1.0};

enum class BasisElement : std::uint8_t { One = 0, i, j, k, E, I, J, K };

enum class Grade : std::uint8_t { Scalar, Vector, Pseudoscalar, Pseudovector };

inline constexpr std::array<BasisElement, 8> kAllBasisElements = {
    BasisElement::One, BasisElement::i, BasisElement::j, BasisElement::k,
    BasisElement::E,   BasisElement::I, BasisElement::J, BasisElement::K};

inline constexpr const char* basis_label(BasisElement e) {
  constexpr const char* labels[8] = {"1", "i", "j", "k", "E", "I", "J", "K"};
  return labels[static_cast<int>(e)];
}

inline constexpr Grade grade_of(BasisElement e) {
  switch (e) {
    case BasisElement::One:
      return Grade::Scalar;
    case BasisElement::i:
    case BasisElement::j:
    case BasisElement::k:
      return Grade::Vector;
    case BasisElement::E:
      return Grade::Pseudoscalar;
    default:
      return Grade::Pseudovector;
  }
}

namespace detail {

// One cell of the basis multiplication table: row * col = coeff * basis,
// with coeff in {+1, -1, +xi, -xi} packed as (re, im).
struct TableCell {
  std::int8_t re;
  std::int8_t im;
  std::uint8_t basis;
};

// Basis products, row element as the left factor.  Indices follow the
// canonical component order (1, i, j, k, E, I, J, K).
inline constexpr std::array<std::array<TableCell, 8>, 8> kProductTable = {{
    // 1 * x
    {{{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 0, 4}, {1, 0, 5}, {1, 0, 6}, {1, 0, 7}}},
    // i * x
    {{{1, 0, 1}, {1, 0, 0}, {0, 1, 7}, {0, -1, 6}, {1, 0, 5}, {1, 0, 4}, {0, 1, 3}, {0, -1, 2}}},
    // j * x
    {{{1, 0, 2}, {0, -1, 7}, {1, 0, 0}, {0, 1, 5}, {1, 0, 6}, {0, -1, 3}, {1, 0, 4}, {0, 1, 1}}},
    // k * x
    {{{1, 0, 3}, {0, 1, 6}, {0, -1, 5}, {1, 0, 0}, {1, 0, 7}, {0, 1, 2}, {0, -1, 1}, {1, 0, 4}}},
    // E * x
    {{{1, 0, 4}, {1, 0, 5}, {1, 0, 6}, {1, 0, 7}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}}},
    // I * x
    {{{1, 0, 5}, {1, 0, 4}, {0, 1, 3}, {0, -1, 2}, {1, 0, 1}, {1, 0, 0}, {0, 1, 7}, {0, -1, 6}}},
    // J * x
    {{{1, 0, 6}, {0, -1, 3}, {1, 0, 4}, {0, 1, 1}, {1, 0, 2}, {0, -1, 7}, {1, 0, 0}, {0, 1, 5}}},
    // K * x
    {{{1, 0, 7}, {0, 1, 2}, {0, -1, 1}, {1, 0, 4}, {1, 0, 3}, {0, 1, 6}, {0, -1, 5}, {1, 0, 0}}},
}};

inline Complex cell_coeff(const TableCell& c) {
  return Complex(static_cast<double>(c.re), static_cast<double>(c.im));
}

}  // namespace detail

/// Product of two basis elements as (coefficient, basis element).
inline std::pair<Complex, BasisElement> basis_product(BasisElement a, BasisElement b) {
  const auto& cell = detail::kProductTable[static_cast<int>(a)][static_cast<int>(b)];
  return {detail::cell_coeff(cell), static_cast<BasisElement>(cell.basis)};
}

/// An octon: 8 complex coefficients in canonical order (1, i, j, k, E, I, J, K).
/// Immutable-by-convention value type; all operations produce new values.
class Octon {
 public:
  constexpr Octon() : c_{} {}

  static Octon zero() { return Octon{}; }

  static Octon scalar(Complex v) {
    Octon r;
    r.c_[0] = v;
    return r;
  }

  static Octon unit(BasisElement e) {
    Octon r;
    r.c_[static_cast<int>(e)] = Complex(1.0, 0.0);
    return r;
  }

  static Octon from_components(const std::array<Complex, 8>& c) {
    Octon r;
    r.c_ = c;
    return r;
  }

  /// Polar vector x*i + y*j + z*k.
  static Octon polar(Complex x, Complex y, Complex z) {
    Octon r;
    r.c_[1] = x;
    r.c_[2] = y;
    r.c_[3] = z;
    return r;
  }

  /// Axial vector x*I + y*J + z*K.
  static Octon axial(Complex x, Complex y, Complex z) {
    Octon r;
    r.c_[5] = x;
    r.c_[6] = y;
    r.c_[7] = z;
    return r;
  }

  /// Pseudoscalar v*E.
  static Octon pseudoscalar(Complex v) {
    Octon r;
    r.c_[4] = v;
    return r;
  }

  Complex operator[](int idx) const { return c_[idx]; }
  Complex& operator[](int idx) { return c_[idx]; }
  Complex component(BasisElement e) const { return c_[static_cast<int>(e)]; }
  const std::array<Complex, 8>& components() const { return c_; }

  Octon operator+(const Octon& o) const {
    Octon r;
    for (int s = 0; s < 8; ++s) r.c_[s] = c_[s] + o.c_[s];
    return r;
  }

  Octon operator-(const Octon& o) const {
    Octon r;
    for (int s = 0; s < 8; ++s) r.c_[s] = c_[s] - o.c_[s];
    return r;
  }

  Octon operator-() const {
    Octon r;
    for (int s = 0; s < 8; ++s) r.c_[s] = -c_[s];
    return r;
  }

  Octon& operator+=(const Octon& o) {
    for (int s = 0; s < 8; ++s) c_[s] += o.c_[s];
    return *this;
  }

  Octon& operator-=(const Octon& o) {
    for (int s = 0; s < 8; ++s) c_[s] -= o.c_[s];
    return *this;
  }

  friend Octon operator*(Complex a, const Octon& x) {
    Octon r;
    for (int s = 0; s < 8; ++s) r.c_[s] = a * x.c_[s];
    return r;
  }

  friend Octon operator*(const Octon& x, Complex a) { return a * x; }
  friend Octon operator*(double a, const Octon& x) { return Complex(a, 0.0) * x; }
  friend Octon operator*(const Octon& x, double a) { return Complex(a, 0.0) * x; }

  bool operator==(const Octon& o) const { return c_ == o.c_; }
  bool operator!=(const Octon& o) const { return !(*this == o); }

  /// Largest component modulus (the residual norm used throughout).
  double max_norm() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::array<Complex, 8> c_;
};

/// Octonic product generated from the basis multiplication table; bilinear
/// and associative.
inline Octon multiply(const Octon& a, const Octon& b) {
  Octon r;
  for (int s = 0; s < 8; ++s) {
    const Complex as = a[s];
    if (as == Complex{}) continue;
    for (int t = 0; t < 8; ++t) {
      const Complex bt = b[t];
      if (bt == Complex{}) continue;
      const auto& cell = detail::kProductTable[s][t];
      r[cell.basis] += as * bt * detail::cell_coeff(cell);
    }
  }
  return r;
}

inline Octon operator*(const Octon& a, const Octon& b) { return multiply(a, b); }

/// Zeroes all components outside grade g.
inline Octon grade_project(const Octon& a, Grade g) {
  Octon r;
  for (int s = 0; s < 8; ++s) {
    if (grade_of(static_cast<BasisElement>(s)) == g) r[s] = a[s];
  }
  return r;
}

/// Componentwise linear combination; the empty sum is the zero octon.
inline Octon linear_combine(const std::vector<std::pair<Complex, Octon>>& terms) {
  Octon r;
  for (const auto& [coeff, value] : terms) r += coeff * value;
  return r;
}

/// (ab + ba) / 2
inline Octon symmetric_product(const Octon& a, const Octon& b) {
  return 0.5 * (multiply(a, b) + multiply(b, a));
}

/// (ab - ba) / 2
inline Octon antisymmetric_product(const Octon& a, const Octon& b) {
  return 0.5 * (multiply(a, b) - multiply(b, a));
}

/// Complex conjugation of every coefficient (xi -> -xi); basis elements are
/// left untouched.
inline Octon complex_conjugate(const Octon& a) {
  Octon r;
  for (int s = 0; s < 8; ++s) r[s] = std::conj(a[s]);
  return r;
}

inline double max_abs_diff(const Octon& a, const Octon& b) { return (a - b).max_norm(); }

/// Coefficient triple of the vector grade (on i, j, k).
inline std::array<Complex, 3> polar_part(const Octon& a) { return {a[1], a[2], a[3]}; }

/// Coefficient triple of the pseudovector grade (on I, J, K).
inline std::array<Complex, 3> axial_part(const Octon& a) { return {a[5], a[6], a[7]}; }

inline std::string format_complex(Complex v) {
  std::ostringstream os;
  os.precision(12);
  if (v.imag() == 0.0) {
    os << v.real();
  } else if (v.real() == 0.0) {
    os << v.imag() << "xi";
  } else {
    os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "xi)";
  }
  return os.str();
}

/// Text form over the basis labels, e.g. "1 + 2i - 0.5K".
inline std::string to_string(const Octon& a) {
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s < 8; ++s) {
    if (a[s] == Complex{}) continue;
    if (!first) os << " + ";
    os << format_complex(a[s]);
    if (s != 0) os << basis_label(static_cast<BasisElement>(s));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace octon
