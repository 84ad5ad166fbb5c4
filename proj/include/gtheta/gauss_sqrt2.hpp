#pragma once

#include <array>
#include <ostream>
#include <string>

#include "gtheta/rational.hpp"

namespace gtheta {

// Element c0 + c1·i + c2·√2 + c3·i√2 of Q(i, √2), stored on the fixed
// basis {1, i, √2, i√2}.
class GaussSqrt2 {
 public:
  using Coords = std::array<Rational, 4>;

  GaussSqrt2() = default;
  GaussSqrt2(Rational c0) : c_{std::move(c0), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  GaussSqrt2(long c0) : c_{Rational(c0), 0, 0, 0} {}       // NOLINT(google-explicit-constructor)
  GaussSqrt2(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  explicit GaussSqrt2(Coords c) : c_(std::move(c)) {}

  static GaussSqrt2 i() { return {0, 1, 0, 0}; }
  static GaussSqrt2 sqrt2() { return {0, 0, 1, 0}; }
  static GaussSqrt2 i_sqrt2() { return {0, 0, 0, 1}; }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  const Rational& real_rational_part() const { return c_[0]; }

  // Complex conjugation i ↦ −i.
  GaussSqrt2 conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
  // Galois automorphism √2 ↦ −√2.
  GaussSqrt2 sqrt2_conj() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

  GaussSqrt2 operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  GaussSqrt2& operator+=(const GaussSqrt2& o);
  GaussSqrt2& operator-=(const GaussSqrt2& o);
  GaussSqrt2& operator*=(const GaussSqrt2& o);
  GaussSqrt2& operator/=(const GaussSqrt2& o);

  friend GaussSqrt2 operator+(GaussSqrt2 x, const GaussSqrt2& y) { return x += y; }
  friend GaussSqrt2 operator-(GaussSqrt2 x, const GaussSqrt2& y) { return x -= y; }
  friend GaussSqrt2 operator*(const GaussSqrt2& x, const GaussSqrt2& y);
  friend GaussSqrt2 operator/(GaussSqrt2 x, const GaussSqrt2& y) { return x /= y; }
  friend bool operator==(const GaussSqrt2&, const GaussSqrt2&) = default;

  GaussSqrt2 inverse() const;

  // Readable form such as "-1+i*sqrt2" or "sqrt2/2".
  std::string to_string() const;

 private:
  Coords c_{};
};

std::ostream& operator<<(std::ostream& os, const GaussSqrt2& x);

}  // namespace gtheta
