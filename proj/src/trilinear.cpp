#include "gtheta/trilinear.hpp"

#include <algorithm>
#include <vector>

#include "gtheta/errors.hpp"

namespace gtheta::trilinear {
namespace {

using Pair = std::array<int, 2>;
using TwoForm = std::map<Pair, GaussSqrt2>;

template <std::size_t N>
int permutation_sign(std::array<int, N> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// ι_x ω as a 2-form on sorted pairs.
TwoForm contract(const AlternatingForm3& w, int x) {
  TwoForm out;
  for (const auto& [t, v] : w.entries()) {
    for (int slot = 0; slot < 3; ++slot) {
      if (t[slot] != x) continue;
      // Move x to the front: one transposition per position passed.
      Pair rest;
      int r = 0;
      for (int k = 0; k < 3; ++k)
        if (k != slot) rest[r++] = t[k];
      out[rest] = slot % 2 == 0 ? v : -v;
    }
  }
  return out;
}

}  // namespace

int sort_sign(Triple t) { return permutation_sign(t); }

void AlternatingForm3::set(int i, int j, int k, const GaussSqrt2& value) {
  Triple t{i, j, k};
  for (int v : t)
    if (v < 0 || v > 6) throw UsageError("form index out of range");
  const int sign = sort_sign(t);
  if (sign == 0) {
    if (!value.is_zero()) throw ConstructionError("nonzero value on a repeated index");
    return;
  }
  std::sort(t.begin(), t.end());
  if (value.is_zero()) entries_.erase(t);
  else entries_[t] = sign > 0 ? value : -value;
}

GaussSqrt2 AlternatingForm3::evaluate(int i, int j, int k) const {
  Triple t{i, j, k};
  const int sign = sort_sign(t);
  if (sign == 0) return {};
  std::sort(t.begin(), t.end());
  const auto it = entries_.find(t);
  if (it == entries_.end()) return {};
  return sign > 0 ? it->second : -it->second;
}

GaussSqrt2 AlternatingForm3::evaluate(const Vec7& x, const Vec7& y, const Vec7& z) const {
  // Sum over the six orderings of each stored triple.
  GaussSqrt2 total;
  for (const auto& [t, v] : entries_) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      const GaussSqrt2& a = x[t[perm[0]]];
      const GaussSqrt2& b = y[t[perm[1]]];
      const GaussSqrt2& c = z[t[perm[2]]];
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      const GaussSqrt2 term = v * a * b * c;
      if (permutation_sign(perm) > 0) total += term;
      else total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

AlternatingForm3 AlternatingForm3::scaled(const GaussSqrt2& c) const {
  AlternatingForm3 out;
  if (c.is_zero()) return out;
  for (const auto& [t, v] : entries_) out.entries_.emplace(t, v * c);
  return out;
}

AlternatingForm3 from_octonion_omega(const octonion::StructureConstants& sc) {
  using octonion::Octonion;
  const auto basis = sc.basis();
  AlternatingForm3 form;
  std::map<Triple, GaussSqrt2> ordered;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        ordered[{a, b, c}] = octonion::trilinear_omega(sc, Octonion::unit(basis, a),
                                                       Octonion::unit(basis, b), Octonion::unit(basis, c));
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) form.set(a, b, c, ordered[{a, b, c}]);
  for (const auto& [t, v] : ordered) {
    if (form.evaluate(t[0], t[1], t[2]) == v) continue;
    throw ConstructionError("omega is not alternating at (" + octonion::element_name(basis, t[0]) + "," +
                            octonion::element_name(basis, t[1]) + "," +
                            octonion::element_name(basis, t[2]) + ")");
  }
  return form;
}

SymmetricPairing engel_pairing(const AlternatingForm3& w) {
  std::array<TwoForm, 7> contractions;
  for (int x = 0; x < 7; ++x) contractions[x] = contract(w, x);

  SymmetricPairing out{Matrix7(7, 7)};
  for (int x = 0; x < 7; ++x) {
    for (int y = 0; y < 7; ++y) {
      GaussSqrt2 coeff;
      for (const auto& [p, vp] : contractions[x]) {
        for (const auto& [q, vq] : contractions[y]) {
          if (p[0] == q[0] || p[0] == q[1] || p[1] == q[0] || p[1] == q[1]) continue;
          // The remaining three indices, ascending, carry the ω factor.
          Triple rest{};
          int r = 0;
          for (int k = 0; k < 7; ++k)
            if (k != p[0] && k != p[1] && k != q[0] && k != q[1]) rest[r++] = k;
          const auto it = w.entries().find(rest);
          if (it == w.entries().end()) continue;
          const int sign =
              permutation_sign(std::array<int, 7>{p[0], p[1], q[0], q[1], rest[0], rest[1], rest[2]});
          const GaussSqrt2 term = vp * vq * it->second;
          if (sign > 0) coeff += term;
          else coeff -= term;
        }
      }
      out.gram(x, y) = coeff;
    }
  }
  return out;
}

bool is_nondegenerate(const AlternatingForm3& w) {
  return !engel_pairing(w).gram.determinant().is_zero();
}

std::optional<GaussSqrt2> proportionality_constant(const Matrix7& a, const Matrix7& b) {
  std::optional<GaussSqrt2> lambda;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!b(r, c).is_zero()) {
        lambda = a(r, c) / b(r, c);
        r = b.rows() - 1;
        break;
      }
  if (!lambda || !(b.scaled(*lambda) == a)) return std::nullopt;
  return lambda;
}

}  // namespace gtheta::trilinear
