#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

/// A distance matrix that is not a well-formed {1,2,3} metric matrix.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested size exceeds what the chosen method can enumerate.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace mhg
