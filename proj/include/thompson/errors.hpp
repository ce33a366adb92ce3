#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

// Base for every domain error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error("index out of range: " + what) {}
};

class InvalidDiagram : public Error {
 public:
  explicit InvalidDiagram(const std::string& what) : Error("invalid diagram: " + what) {}
};

class CrossingBoundExceeded : public Error {
 public:
  CrossingBoundExceeded(std::size_t crossings, std::size_t bound)
      : Error("crossing bound exceeded: " + std::to_string(crossings) + " crossings, bound " +
              std::to_string(bound)) {}
};

class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("integer overflow in polynomial arithmetic") {}
};

}  // namespace thompson
