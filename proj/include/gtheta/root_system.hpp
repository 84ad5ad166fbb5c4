#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gtheta/exact_matrix.hpp"
#include "gtheta/rational.hpp"

namespace gtheta::roots {

enum class Family { A, G2 };

// Root-system type: A(n) for n ≥ 1, or G2.
struct TypeTag {
  Family family = Family::A;
  int rank = 1;

  static TypeTag A(int n) { return {Family::A, n}; }
  static TypeTag G2() { return {Family::G2, 2}; }
  // "A1", "A2", ..., "G2"; throws UsageError otherwise.
  static TypeTag parse(std::string_view name);
  std::string to_string() const;

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long>;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// A weight in simple-root coordinates.
struct Weight {
  RationalVector coords;
  RootSystemPtr system;

  Weight operator+(const Weight& o) const;
  Weight operator*(const Rational& s) const;
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }

  // ⟨λ, α_i^∨⟩ for each simple root.
  RationalVector fundamental_coords() const;
  bool is_dominant() const;
};

// Simple roots, Gram matrix normalized by ⟨θ,θ⟩ = 2, positive roots,
// fundamental weights, ρ, θ and the lattice indices that enter the
// Verlinde formula. Immutable once built.
class RootSystem : public std::enable_shared_from_this<RootSystem> {
 public:
  TypeTag type() const { return type_; }
  int rank() const { return type_.rank; }
  const ExactMatrix<Rational>& cartan() const { return cartan_; }
  const ExactMatrix<Rational>& gram_simple() const { return gram_; }
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_; }
  const RationalVector& rho() const { return rho_; }
  const IntVector& theta() const { return theta_; }
  long dual_coxeter() const { return dual_coxeter_; }
  long center_order() const { return center_order_; }
  long long_index() const { return long_index_; }
  // rank + 2·|Δ₊|
  long dimension() const { return rank() + 2 * static_cast<long>(positive_.size()); }

  Rational pair(const RationalVector& x, const RationalVector& y) const;

  Weight weight(RationalVector simple_coords) const;
  Weight root(std::size_t index) const;  // index into positive_roots()
  Weight rho_weight() const { return weight(rho_); }
  Weight theta_weight() const;
  Weight fundamental_weight(std::size_t i) const { return weight(fundamental_[i]); }
  // Σ c_i ϖ_i
  Weight from_fundamental(const IntVector& coords) const;

  friend RootSystemPtr build(TypeTag type);

 private:
  RootSystem() = default;

  TypeTag type_;
  ExactMatrix<Rational> cartan_;
  ExactMatrix<Rational> gram_;
  std::vector<IntVector> positive_;
  std::vector<RationalVector> fundamental_;
  RationalVector rho_;
  IntVector theta_;
  long dual_coxeter_ = 0;
  long center_order_ = 0;
  long long_index_ = 0;
};

RootSystemPtr build(TypeTag type);

Rational pair(const Weight& x, const Weight& y);

// Weyl dimension formula; requires a dominant weight.
mpz_class weyl_dim(const Weight& lambda);

// dim V_λ · ⟨λ, λ + 2ρ⟩ / dim g.
Rational dynkin_index(const Weight& lambda);

}  // namespace gtheta::roots
