#pragma once

#include <stdexcept>
#include <string>

namespace octon {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An 8x8 operator whose eigenspaces do not span the full component space.
struct NonDiagonalizable : Error {
  using Error::Error;
};

/// Basis octons supplied to a representation are linearly dependent.
struct DegenerateBasis : Error {
  using Error::Error;
};

/// The span of a representation basis is not invariant under the operator,
/// so no representation matrix exists.
struct NotClosed : Error {
  using Error::Error;
};

/// A rotation or boost axis is not normalized.
struct BadAxis : Error {
  using Error::Error;
};

/// Two first-order specs do not form one of the listed conjugate pairings.
struct NotConjugatePair : Error {
  using Error::Error;
};

/// Grid refinement levels disagree beyond tolerance.
struct GridTooCoarse : Error {
  using Error::Error;
};

/// Supplied potentials violate the required gauge condition.
struct GaugeViolated : Error {
  using Error::Error;
};

/// The plane-wave backend only accepts constant potentials.
struct NonConstantPotential : Error {
  using Error::Error;
};

}  // namespace octon
