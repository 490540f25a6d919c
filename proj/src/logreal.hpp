#pragma once

#include <mpfr.h>

#include <string>

#include "numbers.hpp"

namespace gpi {

/// RAII wrapper over mpfr_t with per-value precision. Rounding is always
/// to-nearest. Binary operations take the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of_si(long v, mpfr_prec_t prec = 256);
  static Real of_int(const Int& z, mpfr_prec_t prec = 256);
  /// Natural log; requires z >= 1.
  static Real log_of(const Int& z, mpfr_prec_t prec = 256);
  static Real log_of_ui(unsigned long v, mpfr_prec_t prec = 256);
  /// 2^e (e may be negative), used for comparison slacks.
  static Real pow2(long e, mpfr_prec_t prec = 256);
  /// n-th root of a non-negative integer.
  static Real root_of(const Int& z, unsigned long n, mpfr_prec_t prec = 256);

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& mul_si(long k);
  Real& div_ui(unsigned long k);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Shortest reasonable decimal form with the given significant digits.
  std::string str(int sig_digits = 6) const;
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

/// Non-negative magnitude stored by natural log; positive == false encodes 0.
struct LogReal {
  bool positive = false;
  Real log;

  static LogReal zero(mpfr_prec_t prec = 256) { return {false, Real(prec)}; }
  static LogReal one(mpfr_prec_t prec = 256) { return {true, Real(prec)}; }
  static LogReal of_int(const Int& z, mpfr_prec_t prec = 256);

  /// value^k (k >= 1).
  LogReal pow_ui(unsigned long k) const;
  double log_as_double() const { return positive ? log.to_double() : 0.0; }
  double value_approx() const;
};

/// Comparison slack for all log-space bound checks: 2^-64.
Real log_slack(mpfr_prec_t prec = 256);

}  // namespace gpi
