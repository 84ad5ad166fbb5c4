#pragma once

#include <random>

#include "gtheta/gauss_sqrt2.hpp"
#include "gtheta/quad_ext5.hpp"
#include "gtheta/rational.hpp"

namespace gtheta::testing {

// Small random exact values for property tests; seeds are fixed per test.
class RandomValues {
 public:
  explicit RandomValues(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long bound = 20) {
    return Rational(mpz_class(integer(-bound, bound)), mpz_class(integer(1, bound)));
  }

  // Sparse: each coordinate is zero with probability ~1/3.
  Rational sparse_rational(long bound = 6) { return integer(0, 2) == 0 ? Rational(0) : rational(bound); }

  QuadExt5 quad() { return {rational(), rational()}; }
  GaussSqrt2 gauss() { return {rational(), rational(), rational(), rational()}; }
  GaussSqrt2 sparse_gauss() {
    return {sparse_rational(), sparse_rational(), sparse_rational(), sparse_rational()};
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace gtheta::testing
