#pragma once

#include <stdexcept>
#include <string>

namespace occat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition: mismatched interfaces,
/// malformed objects, a target that is not the single circle, etc.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested surface does not exist, e.g. a boundary permutation whose
/// cycles cannot close up because adjacent interval endpoints carry
/// different branes.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace occat
