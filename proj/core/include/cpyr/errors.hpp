#pragma once

#include <stdexcept>
#include <string>

namespace cpyr {

// Unknown dart, dead dart, out-of-range level, bad dimensions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A kernel that does not satisfy the invariant of its state.
class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Queries that need a level without redundant edges.
class RedundantEdgeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (U-turn inside a segment, loops not nested...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cpyr
