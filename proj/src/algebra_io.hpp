#pragma once

#include <string>

#include "algebra.hpp"

namespace gpi {

/// Parses the line-oriented algebra definition format:
///
///   # comment
///   name: optional free text
///   labels: g0 g1
///   table: g0 g1 / g1 g0
///   basis: e@g0 g@g1
///   prod: e*e = e
///   prod: g*g = e
///   prod: e*g = 1/2 e + -3 g     (coefficients "p", "-p" or "p/q"; "0" = zero)
///
/// Unspecified products are zero. Throws ParseError (position-annotated) on
/// malformed input and ValidationError when the parsed algebra breaks the
/// grading rule (listing every violating triple).
GradedAlgebra parse_algebra_text(const std::string& text);
GradedAlgebra parse_algebra_file(const std::string& path);

/// Canonical text form; export-import round-trips to an equal algebra and a
/// byte-identical re-export.
std::string export_algebra(const GradedAlgebra& A);

}  // namespace gpi
