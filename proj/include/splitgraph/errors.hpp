#pragma once

#include <stdexcept>
#include <string>

namespace splitgraph {

// Precondition, validation and parse failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the symbolic determinant oracles beyond their size cap.
class ScaleError : public Error {
 public:
  using Error::Error;
};

}  // namespace splitgraph
