#pragma once

#include <stdexcept>
#include <string>

namespace homnambu {

// Shape/argument misuse: mismatched dimensions, arities, malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class TupleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace homnambu
