#include "gtheta/bounded_float.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "gtheta/errors.hpp"

namespace gtheta {
namespace {

using detail::MpfrValue;

// |x| rounded up into an error-precision value.
MpfrValue abs_up(mpfr_srcptr x) {
  MpfrValue out(BoundedFloat::kErrorBits);
  mpfr_abs(out.get(), x, MPFR_RNDU);
  return out;
}

// |x| rounded down into an error-precision value.
MpfrValue abs_down(mpfr_srcptr x) {
  MpfrValue out(BoundedFloat::kErrorBits);
  mpfr_abs(out.get(), x, MPFR_RNDD);
  return out;
}

}  // namespace

BoundedFloat::BoundedFloat(long bits) : bits_(bits), value_(bits), error_(kErrorBits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw UsageError("unsupported precision");
}

void BoundedFloat::widen_by_ulp() {
  if (mpfr_zero_p(value_.get())) return;
  MpfrValue ulp(kErrorBits);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(value_.get()) - bits_, MPFR_RNDU);
  add_error(ulp.get());
}

void BoundedFloat::add_error(mpfr_srcptr e) { mpfr_add(error_.get(), error_.get(), e, MPFR_RNDU); }

BoundedFloat BoundedFloat::from_rational(const Rational& r, long bits) {
  BoundedFloat out(bits);
  if (mpfr_set_q(out.value_.get(), r.raw().get_mpq_t(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat BoundedFloat::from_integer(const mpz_class& n, long bits) {
  BoundedFloat out(bits);
  if (mpfr_set_z(out.value_.get(), n.get_mpz_t(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat BoundedFloat::pi(long bits) {
  BoundedFloat out(bits);
  if (mpfr_const_pi(out.value_.get(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat BoundedFloat::operator-() const {
  BoundedFloat out = *this;
  mpfr_neg(out.value_.get(), value_.get(), MPFR_RNDN);
  return out;
}

BoundedFloat operator+(const BoundedFloat& x, const BoundedFloat& y) {
  BoundedFloat out(std::min(x.bits_, y.bits_));
  mpfr_add(out.error_.get(), x.error_.get(), y.error_.get(), MPFR_RNDU);
  if (mpfr_add(out.value_.get(), x.value_.get(), y.value_.get(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat operator-(const BoundedFloat& x, const BoundedFloat& y) { return x + (-y); }

BoundedFloat operator*(const BoundedFloat& x, const BoundedFloat& y) {
  BoundedFloat out(std::min(x.bits_, y.bits_));
  // |xy − x'y'| ≤ |x|·ey + |y|·ex + ex·ey
  const MpfrValue ax = abs_up(x.value_.get());
  const MpfrValue ay = abs_up(y.value_.get());
  MpfrValue term(BoundedFloat::kErrorBits);
  mpfr_mul(term.get(), ax.get(), y.error_.get(), MPFR_RNDU);
  out.add_error(term.get());
  mpfr_mul(term.get(), ay.get(), x.error_.get(), MPFR_RNDU);
  out.add_error(term.get());
  mpfr_mul(term.get(), x.error_.get(), y.error_.get(), MPFR_RNDU);
  out.add_error(term.get());
  if (mpfr_mul(out.value_.get(), x.value_.get(), y.value_.get(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat operator/(const BoundedFloat& x, const BoundedFloat& y) { return x * y.inverse(); }

bool BoundedFloat::excludes_zero() const {
  const MpfrValue lower = abs_down(value_.get());
  return mpfr_cmp(lower.get(), error_.get()) > 0;
}

BoundedFloat BoundedFloat::inverse() const {
  if (!excludes_zero()) throw DomainError("inverse of an interval containing zero");
  BoundedFloat out(bits_);
  // |1/x − 1/x'| ≤ e / (|x|·(|x| − e))
  const MpfrValue ax = abs_down(value_.get());
  MpfrValue gap(kErrorBits);
  mpfr_sub(gap.get(), ax.get(), error_.get(), MPFR_RNDD);
  MpfrValue denom(kErrorBits);
  mpfr_mul(denom.get(), ax.get(), gap.get(), MPFR_RNDD);
  mpfr_div(out.error_.get(), error_.get(), denom.get(), MPFR_RNDU);
  if (mpfr_ui_div(out.value_.get(), 1, value_.get(), MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat BoundedFloat::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BoundedFloat result = from_integer(1, bits_);
  BoundedFloat base = *this;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

BoundedFloat BoundedFloat::magnitude_bound() const {
  BoundedFloat out(kErrorBits);
  mpfr_abs(out.value_.get(), value_.get(), MPFR_RNDU);
  mpfr_add(out.value_.get(), out.value_.get(), error_.get(), MPFR_RNDU);
  return out;
}

BoundedFloat BoundedFloat::sin_pi(const Rational& t, long bits) {
  // Reduce t modulo 2, then fold into [0, 1/2] tracking the sign.
  const mpz_class two_floor = [&] {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.numerator().get_mpz_t(), mpz_class(2 * t.denominator()).get_mpz_t());
    return q;
  }();
  Rational r = t - Rational(mpz_class(2 * two_floor));
  bool negate = false;
  if (r >= Rational(1)) {
    r -= Rational(1);
    negate = true;
  }
  if (r > Rational(1, 2)) r = Rational(1) - r;

  BoundedFloat result(bits);
  if (r.is_zero()) return result;
  if (r == Rational(1, 2)) {
    result = from_integer(1, bits);
  } else {
    const BoundedFloat x = pi(bits) * from_rational(r, bits);
    const BoundedFloat x2 = x * x;
    BoundedFloat term = x;
    BoundedFloat sum = x;
    // Alternating series with decreasing terms (x < 2): the first omitted
    // term bounds the truncation error.
    MpfrValue threshold(kErrorBits);
    mpfr_set_ui_2exp(threshold.get(), 1, -bits - 4, MPFR_RNDU);
    for (long k = 1;; ++k) {
      term = term * x2 * from_rational(Rational(-1, (2 * k) * (2 * k + 1)), bits);
      const BoundedFloat mag = term.magnitude_bound();
      if (mpfr_cmp(mag.value_.get(), threshold.get()) < 0) {
        sum.add_error(mag.value_.get());
        break;
      }
      sum = sum + term;
    }
    result = sum;
  }
  return negate ? -result : result;
}

double BoundedFloat::error_log2() const {
  if (mpfr_zero_p(error_.get())) return -std::numeric_limits<double>::infinity();
  MpfrValue lg(kErrorBits);
  mpfr_log2(lg.get(), error_.get(), MPFR_RNDU);
  return mpfr_get_d(lg.get(), MPFR_RNDU);
}

mpz_class BoundedFloat::nearest_integer() const {
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), value_.get(), MPFR_RNDN);
  return n;
}

double BoundedFloat::distance_bound(const mpz_class& n) const {
  MpfrValue diff(bits_ + 64);
  mpfr_sub_z(diff.get(), value_.get(), n.get_mpz_t(), MPFR_RNDN);
  MpfrValue bound(kErrorBits);
  mpfr_abs(bound.get(), diff.get(), MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), error_.get(), MPFR_RNDU);
  return mpfr_get_d(bound.get(), MPFR_RNDU);
}

std::string BoundedFloat::value_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_.get());
  return buf.data();
}

BoundedFloat BoundedFloat::sqrt_uint(unsigned long n, long bits) {
  BoundedFloat out(bits);
  if (mpfr_sqrt_ui(out.value_.get(), n, MPFR_RNDN) != 0) out.widen_by_ulp();
  return out;
}

BoundedFloat to_bounded_float(const QuadExt5& x, long bits) {
  const BoundedFloat a = BoundedFloat::from_rational(x.rational_part(), bits);
  if (x.is_rational()) return a;
  return a + BoundedFloat::from_rational(x.sqrt5_part(), bits) * BoundedFloat::sqrt_uint(5, bits);
}

}  // namespace gtheta
