// errors.hpp
// Exception types shared by every qsearch module. The CLI maps each one onto
// a stable exit code.

#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, out-of-range parameter, bad config.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The search problem itself is degenerate (no coupling, same-ray frame).
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

// Round-off or discretisation broke a numerical invariant.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace qsearch
