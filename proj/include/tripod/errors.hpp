#pragma once

#include <stdexcept>
#include <string>

namespace tripod {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when |A1 A2 A3 + A3 |O1|^2/4 + A1 |O2|^2/4| falls below the
// denominator floor; signals an unphysical parameter combination
// (e.g. user-supplied zero decay rates).
struct DegenerateDenominator : Error {
  using Error::Error;
};

// Two control beams assigned to the same spatial axis.
struct AxisMismatch : Error {
  using Error::Error;
};

// Field maps that were expected to share a grid do not.
struct GridMismatch : Error {
  using Error::Error;
};

// A metric was requested on a channel whose normalization guard tripped.
struct InactiveChannel : Error {
  using Error::Error;
};

// The cross-section profile has no usable half-maximum crossings
// (peak sits on the window boundary, or the profile never falls
// below half max inside the grid).
struct NoHalfCrossing : Error {
  using Error::Error;
};

// Every point of a detuning scan produced an inactive channel.
struct AllInactive : Error {
  using Error::Error;
};

// Config file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// Config or parameter value violates a documented constraint.
// The message names the offending field.
struct ValidationError : Error {
  using Error::Error;
};

// File system failure while emitting results.
struct IoError : Error {
  using Error::Error;
};

}  // namespace tripod
