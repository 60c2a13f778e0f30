#pragma once

// As-printed reference listings used as cross-check data by the verification
// suites.  The basis product table is the ground truth; these listings are
// transcriptions of the printed matrix forms and derived systems, and a few
// of their cells disagree with what the product table generates.  The
// verifier regenerates everything from the algebra, compares against these
// listings, and flags mismatches with their indices; mismatches confined to
// the known cells recorded here count as flagged passes.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "octon/algebra.hpp"
#include "octon/operators.hpp"

namespace octon::reference {

// Entry codes for listed matrices: 0, +1, -1, +xi, -xi.
enum : std::int8_t { Z = 0, P = 1, N = -1, X = 2, Y = -2 };

using Listed8x8 = std::array<std::array<std::int8_t, 8>, 8>;

inline Complex decode_entry(std::int8_t v) {
  switch (v) {
    case P:
      return Complex(1, 0);
    case N:
      return Complex(-1, 0);
    case X:
      return xi;
    case Y:
      return -xi;
    default:
      return Complex(0, 0);
  }
}

inline OctonOperator decode_matrix(const Listed8x8& listed) {
  OctonOperator r;
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) r.at(s, t) = decode_entry(listed[s][t]);
  return r;
}

// Listed matrix forms of the seven basis operators acting on canonical
// component columns.
inline constexpr Listed8x8 kListedOpI = {{
    {Z, P, Z, Z, Z, Z, Z, Z},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Z, Y},
    {Z, Z, Z, Z, Z, Z, X, Z},
    {Z, Z, Z, Z, Z, P, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, Z, Z, Y, Z, Z, Z, Z},
    {Z, Z, X, Z, Z, Z, Z, Z},
}};

inline constexpr Listed8x8 kListedOpJ = {{
    {Z, Z, P, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Z, X},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Y, Z, Z},
    {Z, Z, Z, Z, Z, Z, P, Z},
    {Z, Z, Z, X, Z, Z, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, Y, Z, Z, Z, Z, Z, Z},
}};

inline constexpr Listed8x8 kListedOpK = {{
    {Z, Z, Z, P, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Y, Z},
    {Z, Z, Z, Z, Z, X, Z, Z},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Z, P},
    {Z, Z, Y, Z, Z, Z, Z, Z},
    {Z, X, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
}};

inline constexpr Listed8x8 kListedOpAxialI = {{
    {Z, Z, Z, Z, Z, P, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, Z, Z, X, Z, Z, Z, Z},
    {Z, Z, Y, Z, Z, Z, Z, Z},
    {Z, P, Z, Z, Z, Z, Z, Z},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Z, X},
    {Z, Z, Z, Z, Z, Z, Y, Z},
}};

inline constexpr Listed8x8 kListedOpAxialJ = {{
    {Z, Z, Z, Z, Z, Z, P, Z},
    {Z, Z, Z, Y, Z, Z, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, X, Z, Z, Z, Z, Z, Z},
    {Z, Z, P, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, Z, Y},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, X, Z, Z},
}};

inline constexpr Listed8x8 kListedOpAxialK = {{
    {Z, Z, Z, Z, Z, Z, Z, P},
    {Z, Z, X, Z, Z, Z, Z, Z},
    {Z, Y, Z, Z, Z, Z, Z, Z},
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, Z, Z, P, Z, Z, Z, Z},
    {Z, Z, Z, Z, Z, Z, X, Z},
    {Z, Z, Z, Z, Z, Y, Z, Z},
    {P, Z, Z, Z, Z, Z, Z, Z},
}};

inline constexpr Listed8x8 kListedOpPseudoscalar = {{
    {Z, Z, Z, Z, P, Z, Z, Z},
    {Z, Z, Z, Z, Z, P, Z, Z},
    {Z, Z, Z, Z, Z, Z, P, Z},
    {Z, Z, Z, Z, Z, Z, Z, P},
    {P, Z, Z, Z, Z, Z, Z, Z},
    {Z, P, Z, Z, Z, Z, Z, Z},
    {Z, Z, P, Z, Z, Z, Z, Z},
    {Z, Z, Z, P, Z, Z, Z, Z},
}};

struct ListedOperator {
  BasisElement element;
  const Listed8x8* matrix;
};

inline const std::array<ListedOperator, 7>& listed_basis_operators() {
  static const std::array<ListedOperator, 7> ops = {{
      {BasisElement::i, &kListedOpI},
      {BasisElement::j, &kListedOpJ},
      {BasisElement::k, &kListedOpK},
      {BasisElement::E, &kListedOpPseudoscalar},
      {BasisElement::I, &kListedOpAxialI},
      {BasisElement::J, &kListedOpAxialJ},
      {BasisElement::K, &kListedOpAxialK},
  }};
  return ops;
}

// Cells where the listed axial-operator matrices disagree with the matrices
// generated from the product table (all are sign flips of xi entries; the
// listed forms match right multiplication instead of left).
struct KnownCell {
  BasisElement element;
  int row;
  int col;
};

inline const std::vector<KnownCell>& known_listing_discrepancies() {
  static const std::vector<KnownCell> cells = {
      {BasisElement::I, 2, 3}, {BasisElement::I, 3, 2},
      {BasisElement::I, 6, 7}, {BasisElement::I, 7, 6},
      {BasisElement::J, 1, 3}, {BasisElement::J, 3, 1},
      {BasisElement::J, 5, 7}, {BasisElement::J, 7, 5},
      {BasisElement::K, 1, 2}, {BasisElement::K, 2, 1},
      {BasisElement::K, 5, 6}, {BasisElement::K, 6, 5},
  };
  return cells;
}

// Listed column of the action of the i operator on a full octon: entry s is
// (source component index, coefficient).  Slots 6 and 7 disagree with the
// product table, which yields source components 3 and 2 there.
struct ListedColumnEntry {
  int source;
  std::int8_t coeff;
};

inline constexpr std::array<ListedColumnEntry, 8> kListedOpIColumn = {{
    {1, P}, {0, P}, {7, Y}, {6, X}, {5, P}, {4, P}, {7, Y}, {6, X},
}};

inline const std::vector<int>& known_column_discrepancies() {
  static const std::vector<int> slots = {6, 7};
  return slots;
}

// Composition table of the reflections and discrete turns, indexed by
// (Rx, Ry, Rz, R, pi_x, pi_y, pi_z); -1 encodes the identity.
inline constexpr std::array<std::array<std::int8_t, 7>, 7> kTurnCompositionTable = {{
    {-1, 6, 5, 4, 3, 2, 1},
    {6, -1, 4, 5, 2, 3, 0},
    {5, 4, -1, 6, 1, 0, 3},
    {4, 5, 6, -1, 0, 1, 2},
    {3, 2, 1, 0, -1, 6, 5},
    {2, 3, 0, 1, 6, -1, 4},
    {1, 0, 3, 2, 5, 4, -1},
}};

// Commutation signs of the reflections/turns (rows) against the seven basis
// operators in order (i, j, k, E, I, J, K): +1 commute, -1 anticommute.
inline constexpr std::array<std::array<std::int8_t, 7>, 7> kTurnCommutationTable = {{
    {-1, 1, 1, -1, 1, -1, -1},   // Rx
    {1, -1, 1, -1, -1, 1, -1},   // Ry
    {1, 1, -1, -1, -1, -1, 1},   // Rz
    {-1, -1, -1, -1, 1, 1, 1},   // R
    {1, -1, -1, 1, 1, -1, -1},   // pi_x
    {-1, 1, -1, 1, -1, 1, -1},   // pi_y
    {-1, -1, 1, 1, -1, -1, 1},   // pi_z
}};

// Listed scalar system of the first-order equation with identity time factor,
// +gradient and inversion-type mass term.  Each row r lists coefficients per
// source component c for (d/dt, d/dx, d/dy, d/dz, mass) in the entry codes
// above.  Rows 3 and 7 repeat the y/z derivative pattern of rows 1 and 5
// where the product table yields x/y derivatives of other components, and
// rows 4..7 list mass signs opposite to the inversion sign pattern.
struct ListedSystemTerm {
  int row;
  int deriv;  // 0 = time, 1..3 = x..z, 4 = mass
  int source;
  std::int8_t coeff;
};

inline const std::vector<ListedSystemTerm>& listed_first_order_system() {
  static const std::vector<ListedSystemTerm> terms = {
      // row 0: scalar component
      {0, 0, 0, P}, {0, 1, 1, P}, {0, 2, 2, P}, {0, 3, 3, P}, {0, 4, 0, X},
      // row 1: i component
      {1, 0, 1, P}, {1, 1, 0, P}, {1, 2, 7, X}, {1, 3, 6, Y}, {1, 4, 1, Y},
      // row 2: j component
      {2, 0, 2, P}, {2, 1, 7, Y}, {2, 3, 5, X}, {2, 2, 0, P}, {2, 4, 2, Y},
      // row 3: k component (listed derivative pattern repeats row 1)
      {3, 0, 3, P}, {3, 3, 0, P}, {3, 2, 7, X}, {3, 3, 6, Y}, {3, 4, 3, Y},
      // row 4: pseudoscalar component (listed mass sign +xi)
      {4, 0, 4, P}, {4, 1, 5, P}, {4, 2, 6, P}, {4, 3, 7, P}, {4, 4, 4, X},
      // row 5: I component (listed mass sign -xi)
      {5, 0, 5, P}, {5, 1, 4, P}, {5, 2, 3, X}, {5, 3, 2, Y}, {5, 4, 5, Y},
      // row 6: J component (listed mass sign -xi)
      {6, 0, 6, P}, {6, 2, 4, P}, {6, 3, 1, X}, {6, 1, 3, Y}, {6, 4, 6, Y},
      // row 7: K component (listed derivative pattern repeats row 5)
      {7, 0, 7, P}, {7, 3, 4, P}, {7, 2, 3, X}, {7, 3, 2, Y}, {7, 4, 7, Y},
  };
  return terms;
}

inline const std::vector<int>& known_system_discrepant_rows() {
  static const std::vector<int> rows = {3, 4, 5, 6, 7};
  return rows;
}

// Listed 4x4 matrix form of a wave function in the four-column
// representation.  Each nonzero entry is a combination of the eight
// components; entry (r, c) lists coefficient codes for the component order
// (scalar, x, y, z, pseudoscalar, X, Y, Z).  Cells (2,3) and (3,2) list the
// axial-Y coefficient with the sign opposite to the one the representation
// matrices generate.
using ListedWaveformCell = std::array<std::int8_t, 8>;

inline constexpr std::array<std::array<ListedWaveformCell, 4>, 4> kListedWaveform = {{
    {{{P, Z, Z, P, P, Z, Z, P}, {Z, P, Y, Z, Z, P, Y, Z}, {}, {}}},
    {{{Z, P, X, Z, Z, P, X, Z}, {P, Z, Z, N, P, Z, Z, N}, {}, {}}},
    {{{}, {}, {P, Z, Z, N, N, Z, Z, P}, {Z, N, X, Z, Z, P, X, Z}}},
    {{{}, {}, {Z, N, Y, Z, Z, P, Y, Z}, {P, Z, Z, P, N, Z, Z, N}}},
}};

inline const std::vector<std::pair<int, int>>& known_waveform_discrepancies() {
  static const std::vector<std::pair<int, int>> cells = {{2, 3}, {3, 2}};
  return cells;
}

}  // namespace octon::reference
