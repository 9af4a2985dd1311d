#pragma once

#include <stdexcept>
#include <string>

namespace wam {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied parameters does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation produced a non-finite value or would alias.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wam
