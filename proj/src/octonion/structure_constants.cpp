#include <sstream>

#include "gtheta/errors.hpp"
#include "gtheta/octonion.hpp"

namespace gtheta::octonion {
namespace {

using C = TableCell::Coeff;

constexpr TableCell zero{};
constexpr TableCell sqrt2_y(int l) { return {0, l, C::Sqrt2}; }
constexpr TableCell neg_sqrt2_y(int l) { return {0, l, C::NegSqrt2}; }
constexpr TableCell i_y(int l) { return {0, l, C::I}; }
constexpr TableCell neg_i_y(int l) { return {0, l, C::NegI}; }
constexpr TableCell minus_one_plus_i_y7{-1, 7, C::I};
constexpr TableCell minus_one_minus_i_y7{-1, 7, C::NegI};
constexpr TableCell minus_one{-1, 0, C::None};

// Rows and columns ordered y2, y3, y4, y5, y6, y1, y7.
constexpr CellGrid kTableB2 = {{
    {zero, neg_sqrt2_y(1), sqrt2_y(6), minus_one_plus_i_y7, zero, zero, neg_i_y(2)},
    {sqrt2_y(1), zero, neg_sqrt2_y(5), zero, minus_one_plus_i_y7, zero, neg_i_y(3)},
    {neg_sqrt2_y(6), sqrt2_y(5), zero, zero, zero, minus_one_plus_i_y7, neg_i_y(4)},
    {minus_one_minus_i_y7, zero, zero, zero, neg_sqrt2_y(4), sqrt2_y(3), i_y(5)},
    {zero, minus_one_minus_i_y7, zero, sqrt2_y(4), zero, neg_sqrt2_y(2), i_y(6)},
    {zero, zero, minus_one_minus_i_y7, neg_sqrt2_y(3), sqrt2_y(2), zero, i_y(1)},
    {i_y(2), i_y(3), i_y(4), neg_i_y(5), neg_i_y(6), neg_i_y(1), minus_one},
}};

// Rows and columns ordered y1, y2, y4, y5, y3, y6, y7.
constexpr CellGrid kTableB3 = {{
    {zero, zero, minus_one_minus_i_y7, neg_sqrt2_y(3), zero, sqrt2_y(2), i_y(1)},
    {zero, zero, sqrt2_y(6), minus_one_plus_i_y7, neg_sqrt2_y(1), zero, neg_i_y(2)},
    {minus_one_plus_i_y7, neg_sqrt2_y(6), zero, zero, sqrt2_y(5), zero, neg_i_y(4)},
    {sqrt2_y(3), minus_one_minus_i_y7, zero, zero, zero, neg_sqrt2_y(4), i_y(5)},
    {zero, sqrt2_y(1), neg_sqrt2_y(5), zero, zero, minus_one_plus_i_y7, neg_i_y(3)},
    {neg_sqrt2_y(2), zero, zero, sqrt2_y(4), minus_one_minus_i_y7, zero, i_y(6)},
    {neg_i_y(1), i_y(2), i_y(4), neg_i_y(5), i_y(3), neg_i_y(6), minus_one},
}};

GaussSqrt2 coefficient(C c) {
  switch (c) {
    case C::Sqrt2: return GaussSqrt2::sqrt2();
    case C::NegSqrt2: return -GaussSqrt2::sqrt2();
    case C::I: return GaussSqrt2::i();
    case C::NegI: return -GaussSqrt2::i();
    case C::None: break;
  }
  return {};
}

std::string pair_name(BasisId b, std::size_t a, std::size_t c) {
  return "(" + element_name(b, a) + "," + element_name(b, c) + ")";
}

// Multiplication rules of the canonical basis: e_i² = −1 and
// e_i e_j = −e_j e_i = ±e_k for i ≠ j.
void check_canonical_rules(const StructureConstants& sc) {
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      const ProductEntry& p = sc.product(a, b);
      const auto fail = [&](const std::string& why) {
        throw ConstructionError("B0 table entry " + pair_name(BasisId::B0, a, b) + " = " +
                                p.to_string(BasisId::B0) + ": " + why);
      };
      if (a == b) {
        ProductEntry expected;
        expected.real = GaussSqrt2(-1);
        if (!(p == expected)) fail("expected -1");
        continue;
      }
      if (!p.real.is_zero()) fail("nonzero real part");
      int nonzero = 0;
      for (std::size_t k = 0; k < 7; ++k) {
        if (p.imag[k].is_zero()) continue;
        ++nonzero;
        if (k == a || k == b || !(p.imag[k] == GaussSqrt2(1) || p.imag[k] == GaussSqrt2(-1)))
          fail("not of the form ±e_k");
      }
      if (nonzero != 1) fail("not of the form ±e_k");
      ProductEntry neg;
      for (std::size_t k = 0; k < 7; ++k) neg.imag[k] = -p.imag[k];
      if (!(sc.product(b, a) == neg)) fail("not anticommutative");
    }
  }
}

}  // namespace

const TableSource& reference_tables() {
  static const TableSource source{kTableB2, kTableB3};
  return source;
}

StructureConstants table_from_grid(BasisId basis, const CellGrid& grid) {
  if (basis == BasisId::B0) throw UsageError("printed tables use the y-bases");
  StructureConstants::Table table;
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      const TableCell& cell = grid[a][b];
      ProductEntry& e = table[a][b];
      e.real = GaussSqrt2(cell.real);
      if (cell.coeff != C::None) e.imag[position_of(basis, cell.label)] = coefficient(cell.coeff);
    }
  }
  return {basis, std::move(table)};
}

StructureConstants transport(const StructureConstants& sc, BasisId to) {
  const BasisId from = sc.basis();
  if (from == to) return sc;
  const Matrix7 to_in_from = change_of_basis(to, from).matrix;
  const Matrix7 from_to_to = change_of_basis(from, to).matrix;

  std::array<Octonion, 7> targets;
  for (std::size_t p = 0; p < 7; ++p) {
    targets[p] = Octonion::zero(from);
    for (std::size_t k = 0; k < 7; ++k) targets[p].coords[k] = to_in_from(k, p);
  }
  StructureConstants::Table table;
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      const Octonion prod = multiply(sc, targets[a], targets[b]);
      ProductEntry& e = table[a][b];
      e.real = prod.real;
      for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t k = 0; k < 7; ++k)
          if (!from_to_to(r, k).is_zero() && !prod.coords[k].is_zero())
            e.imag[r] += from_to_to(r, k) * prod.coords[k];
    }
  }
  return {to, std::move(table)};
}

StructureConstants build_structure_constants(BasisId basis, const TableSource& source) {
  const StructureConstants b2 = table_from_grid(BasisId::B2, source.b2);

  const StructureConstants b3 = transport(b2, BasisId::B3);
  const StructureConstants printed_b3 = table_from_grid(BasisId::B3, source.b3);
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      if (b3.product(a, b) == printed_b3.product(a, b)) continue;
      throw ConstructionError("B3 table entry " + pair_name(BasisId::B3, a, b) + ": printed " +
                              printed_b3.product(a, b).to_string(BasisId::B3) +
                              ", transported from B2 " + b3.product(a, b).to_string(BasisId::B3));
    }
  }

  const StructureConstants b1 = transport(b2, BasisId::B1);
  const StructureConstants b0 = transport(b1, BasisId::B0);
  check_canonical_rules(b0);

  switch (basis) {
    case BasisId::B0: return b0;
    case BasisId::B1: return b1;
    case BasisId::B2: return b2;
    case BasisId::B3: return b3;
  }
  throw UsageError("unknown basis");
}

}  // namespace gtheta::octonion
