#pragma once

#include <mpfr.h>

#include <string>

#include "gtheta/quad_ext5.hpp"
#include "gtheta/rational.hpp"

namespace gtheta {

namespace detail {

// Owning handle for an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  MpfrValue(const MpfrValue& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpfrValue(MpfrValue&& o) noexcept : MpfrValue(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  MpfrValue& operator=(MpfrValue o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpfrValue() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace detail

// High-precision float carrying a rigorous absolute error bound: the true
// quantity lies in [value − error, value + error]. The value is rounded to
// nearest; every error update is rounded upward, and an extra ulp is added
// whenever an operation on the value was inexact.
class BoundedFloat {
 public:
  static constexpr mpfr_prec_t kErrorBits = 64;

  explicit BoundedFloat(long bits);

  static BoundedFloat from_rational(const Rational& r, long bits);
  static BoundedFloat from_integer(const mpz_class& n, long bits);
  static BoundedFloat pi(long bits);
  static BoundedFloat sqrt_uint(unsigned long n, long bits);
  // sin(π·t) for rational t: reduction to [0, π/2], then Taylor series.
  static BoundedFloat sin_pi(const Rational& t, long bits);

  long precision_bits() const { return bits_; }

  BoundedFloat operator-() const;
  friend BoundedFloat operator+(const BoundedFloat& x, const BoundedFloat& y);
  friend BoundedFloat operator-(const BoundedFloat& x, const BoundedFloat& y);
  friend BoundedFloat operator*(const BoundedFloat& x, const BoundedFloat& y);
  friend BoundedFloat operator/(const BoundedFloat& x, const BoundedFloat& y);

  // Requires the enclosing interval to exclude zero.
  BoundedFloat inverse() const;
  BoundedFloat pow(long exponent) const;

  // |value| + error, rounded up.
  BoundedFloat magnitude_bound() const;
  bool excludes_zero() const;

  double value_double() const { return mpfr_get_d(value_.get(), MPFR_RNDN); }
  double error_double() const { return mpfr_get_d(error_.get(), MPFR_RNDU); }
  // log2 of the error bound (−inf for an exact value).
  double error_log2() const;
  // Nearest integer to the value.
  mpz_class nearest_integer() const;
  // Upper bound on |true − n| for the integer n.
  double distance_bound(const mpz_class& n) const;
  // Decimal rendering of the value with the given number of significant digits.
  std::string value_string(int digits = 30) const;

  mpfr_srcptr value() const { return value_.get(); }
  mpfr_srcptr error() const { return error_.get(); }

 private:
  // Adds one ulp of the current value to the error bound.
  void widen_by_ulp();
  void add_error(mpfr_srcptr e);

  long bits_;
  detail::MpfrValue value_;
  detail::MpfrValue error_;
};

// a + b·√5 evaluated at the given precision.
BoundedFloat to_bounded_float(const QuadExt5& x, long bits);

}  // namespace gtheta
