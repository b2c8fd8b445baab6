#pragma once

#include <stdexcept>
#include <string>

namespace wbembed {

/// Raised on contract violations: bad descriptors, dimension mismatches,
/// points outside the domain, malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a step of the lower-bound certificate that must succeed by
/// construction does not. Always indicates a bug, never bad input.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wbembed
