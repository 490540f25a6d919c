#include "logreal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gpi {

Real Real::of_si(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_int(const Int& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::log_of(const Int& z, mpfr_prec_t prec) {
  if (z < 1) throw std::invalid_argument("Real::log_of: argument must be >= 1");
  Real r = of_int(z, prec);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::log_of_ui(unsigned long v, mpfr_prec_t prec) {
  if (v < 1) throw std::invalid_argument("Real::log_of_ui: argument must be >= 1");
  Real r(prec);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

Real Real::root_of(const Int& z, unsigned long n, mpfr_prec_t prec) {
  if (z < 0 || n == 0) throw std::invalid_argument("Real::root_of: bad arguments");
  Real r = of_int(z, prec);
  mpfr_rootn_ui(r.v_, r.v_, n, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  if (o.prec() > prec()) {
    Real t(o.prec());
    mpfr_add(t.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(t);
  } else {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.prec() > prec()) {
    Real t(o.prec());
    mpfr_sub(t.v_, v_, o.v_, MPFR_RNDN);
    *this = std::move(t);
  } else {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::mul_si(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real& Real::div_ui(unsigned long k) {
  mpfr_div_ui(v_, v_, k, MPFR_RNDN);
  return *this;
}

std::string Real::str(int sig_digits) const {
  std::vector<char> buf(64 + sig_digits);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", sig_digits, v_);
  return std::string(buf.data());
}

LogReal LogReal::of_int(const Int& z, mpfr_prec_t prec) {
  if (z < 0) throw std::invalid_argument("LogReal::of_int: negative value");
  if (z == 0) return zero(prec);
  return {true, Real::log_of(z, prec)};
}

LogReal LogReal::pow_ui(unsigned long k) const {
  if (!positive) return *this;
  LogReal r = *this;
  r.log.mul_si(static_cast<long>(k));
  return r;
}

double LogReal::value_approx() const { return positive ? std::exp(log.to_double()) : 0.0; }

Real log_slack(mpfr_prec_t prec) { return Real::pow2(-64, prec); }

}  // namespace gpi
