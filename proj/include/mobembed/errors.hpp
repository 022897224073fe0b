#pragma once

#include <stdexcept>
#include <string>

namespace mobembed {

// Bad parameters or malformed input artifacts. The CLI maps this to exit 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solver produced a non-finite or increasing loss. The CLI maps this to exit 2.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unexpected runtime failure (I/O, inconsistent artifacts). Exit 2.
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mobembed
