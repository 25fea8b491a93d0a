#ifndef ZETAKIRCH_ERRORS_HPP
#define ZETAKIRCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetakirch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad token, bad line structure).
struct ParseError : Error {
  explicit ParseError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  int line_number;
};

// Structurally invalid graph (loop, duplicate edge, zero weight, disconnected, n < 2).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  int line_number;
};

struct SizeError : Error {
  using Error::Error;
};

// kappa_w = 0: resistance distances and Kirchhoff indices are undefined.
struct SingularError : Error {
  using Error::Error;
};

struct PositivityError : Error {
  using Error::Error;
};

// A claimed exact division left a nonzero remainder.
struct DivisibilityError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct UnsupportedGroupError : Error {
  using Error::Error;
};

struct DisconnectedCoverError : Error {
  using Error::Error;
};

struct SimplicityError : Error {
  using Error::Error;
};

// Arithmetic self-consistency failure; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace zetakirch

#endif
