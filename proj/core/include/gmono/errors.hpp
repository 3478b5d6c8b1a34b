#pragma once

#include <stdexcept>
#include <string>

namespace gmono {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments or violated call preconditions.
class invalid_input : public error {
 public:
  using error::error;
};

/// Numerical invariants violated beyond tolerance (inconsistent state,
/// degenerate evaluation point, failed internal consistency check).
class numeric_error : public error {
 public:
  using error::error;
};

/// Malformed state or report files.
class parse_error : public error {
 public:
  using error::error;
};

}  // namespace gmono
