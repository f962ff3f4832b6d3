#pragma once

#include <stdexcept>
#include <string>

namespace flagiso {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rank outside the allowed range for a Dynkin family, or unknown family.
class InvalidDynkinType : public Error {
public:
  using Error::Error;
};

/// Theta equal to the full simple system; there is no flag manifold.
class FullThetaError : public Error {
public:
  FullThetaError() : Error("theta equals the full set of simple roots") {}
};

/// Preconditions of a case-specific operation are not met.
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace flagiso
