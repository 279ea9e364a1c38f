#pragma once

#include <stdexcept>
#include <string>

namespace relalg {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad JSON shape, missing fields, invalid tables).
struct SchemaError : Error {
  using Error::Error;
};

// A precondition of an operation was violated (length mismatch, level out of
// range, exponent above its cap, duality vector too small, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A computation refused to run because it would exceed a resource guard
// (Taylor generator cap, path enumeration cap, exhaustive state cap).
struct ResourceLimitError : Error {
  using Error::Error;
};

// The dual evaluation route was requested but is not available for this
// system (its per-level validation failed or was never admitted).
struct UnsupportedRouteError : Error {
  using Error::Error;
};

}  // namespace relalg
