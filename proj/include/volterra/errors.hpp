#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

// Base class for recoverable library errors. Contract violations (bad
// arguments that the caller should never pass) throw std::invalid_argument
// instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size or degree cap was exceeded (factorial range, pencil order, grid
// size, polynomial degree).
struct CapacityExceeded : Error {
  using Error::Error;
};

// A matrix was passed to an operation that requires a different structure
// tag (e.g. an antisymmetric matrix to the symmetric eigensolver).
struct StructureMismatch : Error {
  using Error::Error;
};

// A numerical routine produced results outside its accuracy contract
// (eigenvalue contamination, singular resolvent, non-convergence).
struct NumericalBreakdown : Error {
  using Error::Error;
};

// An internal invariant that cannot be triggered by valid input failed.
struct InternalError : Error {
  using Error::Error;
};

// A request that is syntactically valid but semantically impossible
// (e.g. pencil method for a part/power combination it does not cover).
// The CLI maps this to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace volterra
