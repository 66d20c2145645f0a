#pragma once

#include <stdexcept>
#include <string>

namespace specball {

/// Thrown when an iterative or quadrature-based routine cannot reach its
/// declared tolerance. The message names the offending object (polynomial,
/// matrix, contour) so failures are actionable from batch logs.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specball
