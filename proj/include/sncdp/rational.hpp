#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sncdp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when inputs are well-formed but mathematically inconsistent.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed text input. `position` is a 0-based character offset
// into the parsed string (or a line number for file formats, see setup_io).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, const std::string& unit = "position")
      : std::runtime_error(message + " at " + unit + " " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// "p/q" for proper fractions, "n" for integers.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace sncdp
