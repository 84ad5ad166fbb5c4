#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtheta/exact_matrix.hpp"
#include "gtheta/gauss_sqrt2.hpp"

namespace gtheta::octonion {

// Bases of Im(O). B0 is the canonical basis e1..e7; B1 = (y1..y7) is the
// split basis; B2 and B3 reorder B1 to fit the SL3 and SO4 decompositions.
enum class BasisId { B0, B1, B2, B3 };

std::string_view to_string(BasisId b);
BasisId parse_basis(std::string_view name);  // throws UsageError

// Label (1-based index of e_k or y_k) at each position of the basis.
const std::array<int, 7>& basis_labels(BasisId b);
// Position (0-based) of the given label within the basis.
std::size_t position_of(BasisId b, int label);
// "e3" or "y5" for the element at the given position.
std::string element_name(BasisId b, std::size_t pos);

using Vec7 = std::array<GaussSqrt2, 7>;
using Matrix7 = ExactMatrix<GaussSqrt2>;

struct Octonion {
  GaussSqrt2 real;
  Vec7 coords{};
  BasisId basis = BasisId::B1;

  static Octonion zero(BasisId b);
  static Octonion unit(BasisId b, std::size_t pos);
  static Octonion scalar(BasisId b, GaussSqrt2 value);

  bool is_zero() const;
  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(const GaussSqrt2& s, Octonion a);
  friend bool operator==(const Octonion&, const Octonion&) = default;

  std::string to_string() const;
};

// Product of two basis vectors: a scalar part plus imaginary coordinates.
struct ProductEntry {
  GaussSqrt2 real;
  Vec7 imag{};
  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
  std::string to_string(BasisId b) const;
};

class StructureConstants {
 public:
  using Table = std::array<std::array<ProductEntry, 7>, 7>;

  StructureConstants(BasisId basis, Table table) : basis_(basis), table_(std::move(table)) {}

  BasisId basis() const { return basis_; }
  // Product of the basis vectors at positions a and b.
  const ProductEntry& product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const Table& table() const { return table_; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  BasisId basis_;
  Table table_;
};

// One cell of a printed multiplication table: real + coeff·y_label.
struct TableCell {
  enum class Coeff { None, Sqrt2, NegSqrt2, I, NegI };
  int real = 0;
  int label = 0;
  Coeff coeff = Coeff::None;
};

using CellGrid = std::array<std::array<TableCell, 7>, 7>;

// Printed multiplication tables, rows/columns in basis order: the B2 table
// is the source of truth, the B3 table is checked against it.
struct TableSource {
  CellGrid b2;
  CellGrid b3;
};

const TableSource& reference_tables();

// Table in the basis read directly from a grid (no consistency checks).
StructureConstants table_from_grid(BasisId basis, const CellGrid& grid);

// Structure constants in the requested basis, derived from the B2 table.
// Throws ConstructionError naming the offending pair when the B3 table or
// the transported B0 table are inconsistent.
StructureConstants build_structure_constants(BasisId basis,
                                             const TableSource& source = reference_tables());

// Same table expressed in another basis by transport of structure.
StructureConstants transport(const StructureConstants& sc, BasisId to);

Octonion multiply(const StructureConstants& sc, const Octonion& a, const Octonion& b);

struct ChangeOfBasis {
  Matrix7 matrix;  // coords_to = matrix · coords_from
  BasisId from;
  BasisId to;
};

// The 7×7 matrix P whose columns are y1..y7 in e-coordinates.
const Matrix7& split_basis_matrix();
ChangeOfBasis change_of_basis(BasisId from, BasisId to);
Octonion change_basis(const Octonion& x, BasisId to);

// Symmetric bilinear form x0·y0 − Re(Im x · Im y) of the norm.
GaussSqrt2 quadratic_form(const StructureConstants& sc, const Octonion& x, const Octonion& y);
Matrix7 gram_matrix(const StructureConstants& sc);

// ω(x, y, z) = −Re[(xy)z].
GaussSqrt2 trilinear_omega(const StructureConstants& sc, const Octonion& x, const Octonion& y,
                           const Octonion& z);

// ---- Lemma tables -------------------------------------------------------

enum class Lemma { SL3, SO4 };

struct TripleCheck {
  std::array<int, 3> labels{};  // y-labels, in the order evaluated
  GaussSqrt2 expected;
  GaussSqrt2 computed;
  bool ok = false;
};

struct LemmaReport {
  Lemma which = Lemma::SL3;
  BasisId basis = BasisId::B2;
  std::vector<TripleCheck> triples;        // all 35 sorted triples
  std::vector<TripleCheck> alternation;    // permuted orderings that failed alternation
  std::vector<TripleCheck> block_checks;   // block vanishing (SO4 only)
  int nonzero_orbits = 0;

  bool passed() const;
  std::optional<TripleCheck> first_failure() const;
};

LemmaReport verify_lemma_tables(Lemma which, const TableSource& source = reference_tables());

// ---- Derivations --------------------------------------------------------

struct DerivationAlgebra {
  BasisId basis = BasisId::B1;
  std::vector<Matrix7> basis_maps;  // column j is D(basis_j)
  std::size_t dimension() const { return basis_maps.size(); }
};

// Solves D(y_a y_b) = D(y_a) y_b + y_a D(y_b) over all ordered basis pairs.
DerivationAlgebra derivation_algebra(const StructureConstants& sc);

// Subalgebra of maps leaving every listed coordinate span invariant.
// Subspaces are given by basis positions (0-based).
DerivationAlgebra stabilizer_subalgebra(const DerivationAlgebra& der,
                                        const std::vector<std::vector<std::size_t>>& subspaces);

bool satisfies_leibniz(const StructureConstants& sc, const Matrix7& d);
bool closed_under_bracket(const DerivationAlgebra& der);

}  // namespace gtheta::octonion
