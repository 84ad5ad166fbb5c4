#pragma once

#include <string>
#include <vector>

#include "gtheta/bounded_float.hpp"
#include "gtheta/quad_ext5.hpp"
#include "gtheta/root_system.hpp"

namespace gtheta::verlinde {

using roots::RootSystemPtr;
using roots::TypeTag;
using roots::Weight;

struct Options {
  long start_bits = 128;
  long precision_cap = 4096;  // certification fails beyond this precision
  long genus_cap = 12;
};

// Dominant weights μ with ⟨μ, θ⟩ ≤ level, and #T at that level.
struct LevelData {
  RootSystemPtr system;
  long level = 0;
  std::vector<Weight> alcove;  // lexicographic in fundamental coordinates
  mpz_class torus_count;
};

struct VerlindeResult {
  mpz_class dimension;
  long genus = 0;
  long level = 0;
  TypeTag type;
  double residual = 0;          // bound on |sum − dimension|
  long precision_bits_used = 0;
};

LevelData alcove_weights(const RootSystemPtr& system, long level);

// (level + g*)^rank · #(P/Q) · #(Q/Q_lg)
mpz_class torus_count(const RootSystemPtr& system, long level);

// Verlinde sum at a fixed precision, with its tracked error.
BoundedFloat verlinde_sum(const LevelData& data, long genus, long bits);

// Certified integer dimension. Precision doubles from start_bits until two
// successive levels round to the same integer with residual below
// 1e-9·max(1, dimension) and below 1/2; throws CertificationError past the cap.
VerlindeResult verlinde_dim(const RootSystemPtr& system, long level, long genus,
                            const Options& options = {});
VerlindeResult verlinde_dim(TypeTag type, long level, long genus, const Options& options = {});

// ((5+√5)/2)^{g−1} + ((5−√5)/2)^{g−1}, computed in Q(√5). Requires g ≥ 2.
mpz_class closed_form_g2(long genus);
// 2^g times the above.
mpz_class closed_form_sl2_level3(long genus);

namespace detail {
// Both closed forms without the public genus precondition (g = 1 gives 2).
QuadExt5 closed_form_g2_exact(long genus);
}  // namespace detail

struct TrigIdentity {
  std::string name;
  double gap = 0;    // |lhs − rhs| between the evaluated centers
  double bound = 0;  // sum of the two tracked errors
  bool ok = false;
};

struct TrigReport {
  long bits = 0;
  std::vector<TrigIdentity> identities;
  bool passed() const;
};

// Products of sines at rational multiples of π against their Q(√5) values.
TrigReport trig_fixture_check(long bits = 256);

struct IdentityCheck {
  std::string id;           // "i" .. "vii"
  std::string description;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct IdentityRow {
  long genus = 0;
  std::vector<IdentityCheck> checks;
};

struct IdentityReport {
  long genus_lo = 0;
  long genus_hi = 0;
  std::vector<IdentityRow> rows;  // ascending genus
  bool passed() const;
  // "g=3 (iv): lhs != rhs" for the first failing check, empty if none.
  std::string first_failure() const;
};

// Rows are evaluated concurrently and returned in ascending genus order.
IdentityReport identity_suite(long genus_lo, long genus_hi, const Options& options = {});

}  // namespace gtheta::verlinde
