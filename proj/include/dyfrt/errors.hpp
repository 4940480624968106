#pragma once

#include <stdexcept>
#include <string>

namespace dyfrt {

/// Malformed input: wrong dimensions, out-of-range entries, bad JSON shape.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not meet its precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure or enumeration exceeded its configured cap.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyfrt
