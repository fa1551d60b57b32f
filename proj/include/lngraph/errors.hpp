#ifndef LNGRAPH_ERRORS_HPP
#define LNGRAPH_ERRORS_HPP

#include <stdexcept>

namespace lngraph {

/// Raised when an operation rejects its arguments (same-vertex pairs,
/// lengths out of range, capacity overflow, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the requested graph order is outside the supported range
/// of an operation (n < 3 for construction, n < 6 for cycle building, ...).
class UnsupportedOrderError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Raised when certificate text cannot be parsed.
class CertificateParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lngraph

#endif
