#include "gtheta/gauss_sqrt2.hpp"

#include <algorithm>

#include "gtheta/errors.hpp"

namespace gtheta {
namespace {

struct BasisProduct {
  int index;
  int coeff;
};

// kProducts[a][b] = basis_a * basis_b on {1, i, √2, i√2}.
constexpr BasisProduct kProducts[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, 1}, {0, 2}, {1, 2}},
    {{3, 1}, {2, -1}, {1, 2}, {0, -2}},
};

}  // namespace

bool GaussSqrt2::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

GaussSqrt2& GaussSqrt2::operator+=(const GaussSqrt2& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

GaussSqrt2& GaussSqrt2::operator-=(const GaussSqrt2& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

GaussSqrt2 operator*(const GaussSqrt2& x, const GaussSqrt2& y) {
  GaussSqrt2 out;
  for (int a = 0; a < 4; ++a) {
    if (x.c_[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      if (y.c_[b].is_zero()) continue;
      const BasisProduct p = kProducts[a][b];
      out.c_[p.index] += Rational(p.coeff) * x.c_[a] * y.c_[b];
    }
  }
  return out;
}

GaussSqrt2& GaussSqrt2::operator*=(const GaussSqrt2& o) { return *this = *this * o; }

GaussSqrt2 GaussSqrt2::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(i,sqrt2)");
  // x·conj(x) lies in Q(√2); multiplying by its √2-conjugate lands in Q.
  const GaussSqrt2 partial = *this * conj();
  const GaussSqrt2 full = partial * partial.sqrt2_conj();
  const Rational n = full.c_[0];
  const GaussSqrt2 numerator = conj() * partial.sqrt2_conj();
  return {numerator.c_[0] / n, numerator.c_[1] / n, numerator.c_[2] / n, numerator.c_[3] / n};
}

GaussSqrt2& GaussSqrt2::operator/=(const GaussSqrt2& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(i,sqrt2)");
  return *this = *this * o.inverse();
}

std::string GaussSqrt2::to_string() const {
  static const char* const kNames[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    if (c.sign() < 0) s += "-";
    else if (!s.empty()) s += "+";
    const Rational mag = c.abs();
    if (k == 0) {
      s += mag.pretty();
    } else if (mag == Rational(1)) {
      s += kNames[k];
    } else if (mag.numerator() == 1) {
      s += std::string(kNames[k]) + "/" + mag.denominator().get_str();
    } else {
      s += mag.pretty() + "*" + kNames[k];
    }
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const GaussSqrt2& x) { return os << x.to_string(); }

}  // namespace gtheta
