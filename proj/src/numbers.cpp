#include "numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace gpi {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int multinomial(unsigned long m, const std::vector<unsigned>& parts) {
  unsigned long sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != m) throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + ", expected " + std::to_string(m));
  Int r = factorial(m);
  for (unsigned p : parts) {
    if (p > 1) r /= factorial(p);
  }
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool parse_int_token(const std::string& s, Int& out) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) return false;
  out = Int(body);
  if (neg) out = -out;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_int_token(text, num)) return std::nullopt;
  } else {
    if (!parse_int_token(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int_token(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string int_str(const Int& z) { return z.get_str(); }

}  // namespace gpi
