#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpi {

using Int = mpz_class;
using Rational = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// m! / (parts_1! ... parts_t!). Throws std::invalid_argument unless sum(parts) == m.
Int multinomial(unsigned long m, const std::vector<unsigned>& parts);

/// Accepts "p", "-p", "p/q" with nonzero q. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

std::string rational_str(const Rational& q);
std::string int_str(const Int& z);

}  // namespace gpi
