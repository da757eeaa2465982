#pragma once

#include <stdexcept>
#include <string>

namespace gsp4 {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A variable with a negative exponent was bound to zero.
struct ZeroSubstitutionIntoNegativePower : Error {
  using Error::Error;
};

/// A substitution or division produced a zero denominator.
struct ZeroDenominator : Error {
  using Error::Error;
};

/// Series expansion requested at a pole: the denominator's order-zero
/// coefficient in the expansion variable is not a unit of the Laurent ring.
struct NonUnitDenominator : Error {
  using Error::Error;
};

/// An operation exceeded the configured term-count ceiling.
struct ResourceLimit : Error {
  using Error::Error;
};

/// The place has (E/v) = 0; the unramified computation does not apply.
struct RamifiedPlace : Error {
  using Error::Error;
};

/// An inert-case routine was called with split data or vice versa.
struct WrongCase : Error {
  using Error::Error;
};

/// Split parameters with nu(Pi_1) = nu(Pi_2); the eta/theta weights degenerate.
struct DegenerateSplitParameter : Error {
  using Error::Error;
};

/// A Hilbert-symbol argument was zero.
struct ZeroArgument : Error {
  using Error::Error;
};

}  // namespace gsp4
