#pragma once

#include <stdexcept>
#include <string>

namespace gpi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded; the message names the cap.
struct CapError : Error {
  CapError(const std::string& cap_name, const std::string& detail)
      : Error("resource cap '" + cap_name + "' exceeded: " + detail), cap(cap_name) {}
  std::string cap;
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

struct ValidationError : Error {
  using Error::Error;
};

/// An internal cross-check failed (e.g. a non-integer multiplicity). Always a bug
/// in this library or a broken input, never a property of the algebra.
struct IntegrityError : Error {
  using Error::Error;
};

}  // namespace gpi
