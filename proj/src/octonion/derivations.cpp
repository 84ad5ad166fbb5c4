#include "gtheta/octonion.hpp"

namespace gtheta::octonion {
namespace {

constexpr std::size_t kUnknowns = 49;

std::size_t unknown(std::size_t row, std::size_t col) { return row * 7 + col; }

std::vector<GaussSqrt2> flatten(const Matrix7& m) {
  std::vector<GaussSqrt2> v(kUnknowns);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) v[unknown(r, c)] = m(r, c);
  return v;
}

Matrix7 unflatten(const std::vector<GaussSqrt2>& v) {
  Matrix7 m(7, 7);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) m(r, c) = v[unknown(r, c)];
  return m;
}

// Reduced basis of a span for membership tests.
class SpanReducer {
 public:
  explicit SpanReducer(const std::vector<Matrix7>& maps) {
    ExactMatrix<GaussSqrt2> rows(maps.size(), kUnknowns);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto v = flatten(maps[k]);
      for (std::size_t c = 0; c < kUnknowns; ++c) rows(k, c) = v[c];
    }
    pivots_ = rows.reduce();
    reduced_ = std::move(rows);
  }

  bool contains(const Matrix7& m) const {
    auto v = flatten(m);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const GaussSqrt2 f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < kUnknowns; ++c)
        if (!reduced_(r, c).is_zero()) v[c] -= f * reduced_(r, c);
    }
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  ExactMatrix<GaussSqrt2> reduced_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

DerivationAlgebra derivation_algebra(const StructureConstants& sc) {
  // Each ordered pair (a, b) gives 8 scalar equations (real part and seven
  // imaginary coordinates) linear in the 49 entries of D.
  std::vector<std::vector<GaussSqrt2>> equations;
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      std::vector<std::vector<GaussSqrt2>> eq(8, std::vector<GaussSqrt2>(kUnknowns));
      // D(y_a y_b) = Σ_k c_k D(y_k); D kills the scalar part.
      const ProductEntry& ab = sc.product(a, b);
      for (std::size_t k = 0; k < 7; ++k) {
        if (ab.imag[k].is_zero()) continue;
        for (std::size_t m = 0; m < 7; ++m) eq[1 + m][unknown(m, k)] += ab.imag[k];
      }
      // − D(y_a) y_b − y_a D(y_b)
      for (std::size_t m = 0; m < 7; ++m) {
        const ProductEntry& mb = sc.product(m, b);
        const ProductEntry& am = sc.product(a, m);
        eq[0][unknown(m, a)] -= mb.real;
        eq[0][unknown(m, b)] -= am.real;
        for (std::size_t n = 0; n < 7; ++n) {
          if (!mb.imag[n].is_zero()) eq[1 + n][unknown(m, a)] -= mb.imag[n];
          if (!am.imag[n].is_zero()) eq[1 + n][unknown(m, b)] -= am.imag[n];
        }
      }
      for (auto& row : eq) {
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || !x.is_zero();
        if (nonzero) equations.push_back(std::move(row));
      }
    }
  }

  ExactMatrix<GaussSqrt2> system(equations.size(), kUnknowns);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t c = 0; c < kUnknowns; ++c) system(r, c) = equations[r][c];

  DerivationAlgebra der;
  der.basis = sc.basis();
  for (const auto& v : system.nullspace()) der.basis_maps.push_back(unflatten(v));
  return der;
}

DerivationAlgebra stabilizer_subalgebra(const DerivationAlgebra& der,
                                        const std::vector<std::vector<std::size_t>>& subspaces) {
  // Unknowns: coefficients of the combination Σ c_k D_k.
  std::vector<std::vector<GaussSqrt2>> constraints;
  for (const auto& w : subspaces) {
    std::vector<bool> inside(7, false);
    for (auto p : w) inside.at(p) = true;
    for (std::size_t col : w)
      for (std::size_t row = 0; row < 7; ++row) {
        if (inside[row]) continue;
        std::vector<GaussSqrt2> c(der.dimension());
        for (std::size_t k = 0; k < der.dimension(); ++k) c[k] = der.basis_maps[k](row, col);
        constraints.push_back(std::move(c));
      }
  }

  DerivationAlgebra sub;
  sub.basis = der.basis;
  if (constraints.empty()) {
    sub.basis_maps = der.basis_maps;
    return sub;
  }
  ExactMatrix<GaussSqrt2> system(constraints.size(), der.dimension());
  for (std::size_t r = 0; r < constraints.size(); ++r)
    for (std::size_t k = 0; k < der.dimension(); ++k) system(r, k) = constraints[r][k];
  for (const auto& coeffs : system.nullspace()) {
    Matrix7 m(7, 7);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) m = m + der.basis_maps[k].scaled(coeffs[k]);
    sub.basis_maps.push_back(std::move(m));
  }
  return sub;
}

bool satisfies_leibniz(const StructureConstants& sc, const Matrix7& d) {
  const BasisId b = sc.basis();
  const auto apply = [&](const Octonion& x) {
    Octonion out = Octonion::zero(b);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t k = 0; k < 7; ++k)
        if (!d(r, k).is_zero() && !x.coords[k].is_zero()) out.coords[r] += d(r, k) * x.coords[k];
    return out;
  };
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      const Octonion x = Octonion::unit(b, i);
      const Octonion y = Octonion::unit(b, j);
      const Octonion lhs = apply(multiply(sc, x, y));
      const Octonion rhs = multiply(sc, apply(x), y) + multiply(sc, x, apply(y));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool closed_under_bracket(const DerivationAlgebra& der) {
  const SpanReducer span(der.basis_maps);
  for (std::size_t a = 0; a < der.dimension(); ++a)
    for (std::size_t b = a + 1; b < der.dimension(); ++b) {
      const Matrix7& x = der.basis_maps[a];
      const Matrix7& y = der.basis_maps[b];
      if (!span.contains(x * y - y * x)) return false;
    }
  return true;
}

}  // namespace gtheta::octonion
