#include <algorithm>

#include "gtheta/errors.hpp"
#include "gtheta/octonion.hpp"

namespace gtheta::octonion {
namespace {

void require_same_basis(BasisId a, BasisId b, const char* op) {
  if (a != b)
    throw UsageError(std::string(op) + ": basis mismatch (" + std::string(to_string(a)) + " vs " +
                     std::string(to_string(b)) + ")");
}

int single_term_count(const GaussSqrt2& x) {
  return static_cast<int>(std::count_if(x.coords().begin(), x.coords().end(),
                                        [](const Rational& r) { return !r.is_zero(); }));
}

std::string render(const GaussSqrt2& real, const Vec7& coords, BasisId b) {
  std::string s = real.is_zero() ? "" : real.to_string();
  for (std::size_t k = 0; k < 7; ++k) {
    const GaussSqrt2& c = coords[k];
    if (c.is_zero()) continue;
    std::string term;
    const std::string cs = c.to_string();
    if (cs == "1") term = element_name(b, k);
    else if (cs == "-1") term = "-" + element_name(b, k);
    else if (single_term_count(c) == 1) term = cs + "*" + element_name(b, k);
    else term = "(" + cs + ")*" + element_name(b, k);
    if (!s.empty() && term.front() != '-') s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

// Columns give the basis vectors of `b` in B1 (label) coordinates.
Matrix7 to_split_basis(BasisId b) {
  if (b == BasisId::B0) return split_basis_matrix().inverse();
  Matrix7 m(7, 7);
  const auto& labels = basis_labels(b);
  for (std::size_t p = 0; p < 7; ++p) m(static_cast<std::size_t>(labels[p] - 1), p) = GaussSqrt2(1);
  return m;
}

Matrix7 from_split_basis(BasisId b) {
  if (b == BasisId::B0) return split_basis_matrix();
  return to_split_basis(b).transpose();
}

}  // namespace

std::string_view to_string(BasisId b) {
  switch (b) {
    case BasisId::B0: return "B0";
    case BasisId::B1: return "B1";
    case BasisId::B2: return "B2";
    case BasisId::B3: return "B3";
  }
  return "?";
}

BasisId parse_basis(std::string_view name) {
  for (BasisId b : {BasisId::B0, BasisId::B1, BasisId::B2, BasisId::B3})
    if (to_string(b) == name) return b;
  throw UsageError("unknown basis '" + std::string(name) + "'");
}

const std::array<int, 7>& basis_labels(BasisId b) {
  static const std::array<int, 7> identity{1, 2, 3, 4, 5, 6, 7};
  static const std::array<int, 7> sl3{2, 3, 4, 5, 6, 1, 7};
  static const std::array<int, 7> so4{1, 2, 4, 5, 3, 6, 7};
  switch (b) {
    case BasisId::B2: return sl3;
    case BasisId::B3: return so4;
    default: return identity;
  }
}

std::size_t position_of(BasisId b, int label) {
  const auto& labels = basis_labels(b);
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw UsageError("label out of range");
  return static_cast<std::size_t>(it - labels.begin());
}

std::string element_name(BasisId b, std::size_t pos) {
  return (b == BasisId::B0 ? "e" : "y") + std::to_string(basis_labels(b)[pos]);
}

Octonion Octonion::zero(BasisId b) {
  Octonion x;
  x.basis = b;
  return x;
}

Octonion Octonion::unit(BasisId b, std::size_t pos) {
  Octonion x = zero(b);
  x.coords[pos] = GaussSqrt2(1);
  return x;
}

Octonion Octonion::scalar(BasisId b, GaussSqrt2 value) {
  Octonion x = zero(b);
  x.real = std::move(value);
  return x;
}

bool Octonion::is_zero() const {
  return real.is_zero() &&
         std::all_of(coords.begin(), coords.end(), [](const GaussSqrt2& c) { return c.is_zero(); });
}

Octonion Octonion::operator-() const {
  Octonion x = *this;
  x.real = -x.real;
  for (auto& c : x.coords) c = -c;
  return x;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  require_same_basis(basis, o.basis, "add");
  real += o.real;
  for (std::size_t k = 0; k < 7; ++k) coords[k] += o.coords[k];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) { return *this += -o; }

Octonion operator*(const GaussSqrt2& s, Octonion a) {
  a.real *= s;
  for (auto& c : a.coords) c *= s;
  return a;
}

std::string Octonion::to_string() const { return render(real, coords, basis); }

std::string ProductEntry::to_string(BasisId b) const { return render(real, imag, b); }

Octonion multiply(const StructureConstants& sc, const Octonion& a, const Octonion& b) {
  require_same_basis(a.basis, b.basis, "multiply");
  require_same_basis(a.basis, sc.basis(), "multiply");
  // (r + u)(s + v) = rs + rv + su + uv
  Octonion out = Octonion::zero(a.basis);
  out.real = a.real * b.real;
  for (std::size_t k = 0; k < 7; ++k) {
    if (!a.real.is_zero() && !b.coords[k].is_zero()) out.coords[k] += a.real * b.coords[k];
    if (!b.real.is_zero() && !a.coords[k].is_zero()) out.coords[k] += b.real * a.coords[k];
  }
  for (std::size_t i = 0; i < 7; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < 7; ++j) {
      if (b.coords[j].is_zero()) continue;
      const GaussSqrt2 w = a.coords[i] * b.coords[j];
      const ProductEntry& p = sc.product(i, j);
      if (!p.real.is_zero()) out.real += w * p.real;
      for (std::size_t k = 0; k < 7; ++k)
        if (!p.imag[k].is_zero()) out.coords[k] += w * p.imag[k];
    }
  }
  return out;
}

const Matrix7& split_basis_matrix() {
  static const Matrix7 p = [] {
    const GaussSqrt2 h(0, 0, Rational(1, 2), 0);  // √2/2
    const GaussSqrt2 ih(0, 0, 0, Rational(1, 2));  // i√2/2
    Matrix7 m(7, 7);
    // Column j holds y_{j+1} in e-coordinates.
    m(1, 0) = h;  m(4, 0) = -ih;
    m(0, 1) = h;  m(3, 1) = -ih;
    m(2, 2) = h;  m(5, 2) = -ih;
    m(1, 3) = h;  m(4, 3) = ih;
    m(0, 4) = h;  m(3, 4) = ih;
    m(2, 5) = h;  m(5, 5) = ih;
    m(6, 6) = GaussSqrt2(1);
    return m;
  }();
  return p;
}

ChangeOfBasis change_of_basis(BasisId from, BasisId to) {
  if (from == to) return {Matrix7::identity(7), from, to};
  return {from_split_basis(to) * to_split_basis(from), from, to};
}

Octonion change_basis(const Octonion& x, BasisId to) {
  if (x.basis == to) return x;
  const Matrix7 m = change_of_basis(x.basis, to).matrix;
  Octonion out = Octonion::scalar(to, x.real);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t k = 0; k < 7; ++k)
      if (!m(r, k).is_zero() && !x.coords[k].is_zero()) out.coords[r] += m(r, k) * x.coords[k];
  return out;
}

GaussSqrt2 quadratic_form(const StructureConstants& sc, const Octonion& x, const Octonion& y) {
  require_same_basis(x.basis, y.basis, "quadratic_form");
  Octonion ix = x;
  Octonion iy = y;
  ix.real = iy.real = GaussSqrt2();
  return x.real * y.real - multiply(sc, ix, iy).real;
}

Matrix7 gram_matrix(const StructureConstants& sc) {
  Matrix7 g(7, 7);
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b)
      g(a, b) = quadratic_form(sc, Octonion::unit(sc.basis(), a), Octonion::unit(sc.basis(), b));
  return g;
}

GaussSqrt2 trilinear_omega(const StructureConstants& sc, const Octonion& x, const Octonion& y,
                           const Octonion& z) {
  require_same_basis(x.basis, y.basis, "trilinear_omega");
  require_same_basis(x.basis, z.basis, "trilinear_omega");
  return -multiply(sc, multiply(sc, x, y), z).real;
}

}  // namespace gtheta::octonion
