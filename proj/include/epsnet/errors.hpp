#pragma once

#include <stdexcept>

namespace epsnet {

/// An exact oracle was asked to run on an instance above its size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked inequality that holds as a theorem came out false. Always an
/// implementation bug, never a property of the input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace epsnet
