#pragma once

#include <array>
#include <map>
#include <optional>

#include "gtheta/octonion.hpp"

namespace gtheta::trilinear {

using octonion::Matrix7;
using octonion::Vec7;
using Triple = std::array<int, 3>;

// Alternating 3-form on a 7-dimensional space, stored sparsely on sorted
// index triples (0-based, a < b < c).
class AlternatingForm3 {
 public:
  // Stores value at (i, j, k) in any order; the sorted entry absorbs the sign.
  // Repeated indices require a zero value.
  void set(int i, int j, int k, const GaussSqrt2& value);
  GaussSqrt2 evaluate(int i, int j, int k) const;
  GaussSqrt2 evaluate(const Vec7& x, const Vec7& y, const Vec7& z) const;

  const std::map<Triple, GaussSqrt2>& entries() const { return entries_; }
  AlternatingForm3 scaled(const GaussSqrt2& c) const;
  // Form keeping only the entries accepted by the predicate.
  template <typename Pred>
  AlternatingForm3 filtered(Pred keep) const {
    AlternatingForm3 out;
    for (const auto& [t, v] : entries_)
      if (keep(t)) out.entries_.emplace(t, v);
    return out;
  }

  friend bool operator==(const AlternatingForm3&, const AlternatingForm3&) = default;

 private:
  std::map<Triple, GaussSqrt2> entries_;
};

// Sign of the permutation sorting the given distinct indices; 0 on repeats.
int sort_sign(Triple t);

struct SymmetricPairing {
  Matrix7 gram;
};

// ω(x, y, z) = −Re[(xy)z] on basis vectors of the table's basis. Throws
// ConstructionError if the values are not alternating.
AlternatingForm3 from_octonion_omega(const octonion::StructureConstants& sc);

// B_ω(x, y) = ω(x,·,·) ∧ ω(y,·,·) ∧ ω, read against e1 ∧ … ∧ e7.
SymmetricPairing engel_pairing(const AlternatingForm3& w);

bool is_nondegenerate(const AlternatingForm3& w);

// λ with a = λ·b exactly, if one exists (b must be nonzero).
std::optional<GaussSqrt2> proportionality_constant(const Matrix7& a, const Matrix7& b);

}  // namespace gtheta::trilinear
