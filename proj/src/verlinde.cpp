#include "gtheta/verlinde.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

#include "gtheta/errors.hpp"

namespace gtheta::verlinde {
namespace {

void require_genus(long genus, const Options& options) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  if (genus > options.genus_cap)
    throw UsageError("genus " + std::to_string(genus) + " exceeds the configured cap " +
                     std::to_string(options.genus_cap));
}

void require_level(long level) {
  if (level < 1) throw UsageError("level must be at least 1");
}

mpz_class power(long base, long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

const QuadExt5 kPlus{Rational(5, 2), Rational(1, 2)};
const QuadExt5 kMinus{Rational(5, 2), Rational(-1, 2)};

}  // namespace

LevelData alcove_weights(const RootSystemPtr& system, long level) {
  require_level(level);
  const auto rank = static_cast<std::size_t>(system->rank());
  // ⟨ϖ_i, θ⟩ for each fundamental weight (the comarks).
  std::vector<long> comarks;
  for (std::size_t i = 0; i < rank; ++i)
    comarks.push_back(pair(system->fundamental_weight(i), system->theta_weight()).to_integer().get_si());

  LevelData data;
  data.system = system;
  data.level = level;
  data.torus_count = torus_count(system, level);
  roots::IntVector coords(rank, 0);
  std::function<void(std::size_t, long)> visit = [&](std::size_t i, long budget) {
    if (i == rank) {
      data.alcove.push_back(system->from_fundamental(coords));
      return;
    }
    for (long c = 0; c * comarks[i] <= budget; ++c) {
      coords[i] = c;
      visit(i + 1, budget - c * comarks[i]);
    }
    coords[i] = 0;
  };
  visit(0, level);
  return data;
}

mpz_class torus_count(const RootSystemPtr& system, long level) {
  require_level(level);
  return power(level + system->dual_coxeter(), system->rank()) * system->center_order() *
         system->long_index();
}

BoundedFloat verlinde_sum(const LevelData& data, long genus, long bits) {
  const roots::RootSystem& rs = *data.system;
  const Rational denom(data.level + rs.dual_coxeter());
  const BoundedFloat two = BoundedFloat::from_integer(2, bits);
  BoundedFloat sum(bits);
  for (const Weight& mu : data.alcove) {
    const Weight shifted = mu + rs.rho_weight();
    BoundedFloat term = BoundedFloat::from_integer(1, bits);
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const Rational t = pair(rs.root(k), shifted) / denom;
      term = term * (two * BoundedFloat::sin_pi(t, bits)).pow(2 - 2 * genus);
    }
    sum = sum + term;
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), data.torus_count.get_mpz_t(), static_cast<unsigned long>(genus - 1));
  return BoundedFloat::from_integer(scale, bits) * sum;
}

VerlindeResult verlinde_dim(const RootSystemPtr& system, long level, long genus, const Options& options) {
  require_genus(genus, options);
  require_level(level);
  const LevelData data = alcove_weights(system, level);

  VerlindeResult result;
  result.genus = genus;
  result.level = level;
  result.type = system->type();

  bool have_previous = false;
  mpz_class previous;
  double residual = 0;
  long bits = options.start_bits;
  for (; bits <= options.precision_cap; bits *= 2) {
    const BoundedFloat s = verlinde_sum(data, genus, bits);
    const mpz_class n = s.nearest_integer();
    residual = s.distance_bound(n);
    const double tolerance = 1e-9 * std::max(1.0, n.get_d());
    if (have_previous && previous == n && residual < tolerance && residual < 0.5) {
      result.dimension = n;
      result.residual = residual;
      result.precision_bits_used = bits;
      return result;
    }
    previous = n;
    have_previous = true;
  }
  const long last_bits = bits / 2;
  throw CertificationError("could not certify Verlinde sum for " + system->type().to_string() +
                               " level " + std::to_string(level) + " genus " + std::to_string(genus) +
                               ": residual " + std::to_string(residual) + " at " +
                               std::to_string(last_bits) + " bits",
                           residual, last_bits);
}

VerlindeResult verlinde_dim(TypeTag type, long level, long genus, const Options& options) {
  return verlinde_dim(roots::build(type), level, genus, options);
}

namespace detail {

QuadExt5 closed_form_g2_exact(long genus) {
  return kPlus.pow(genus - 1) + kMinus.pow(genus - 1);
}

}  // namespace detail

mpz_class closed_form_g2(long genus) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  const QuadExt5 value = detail::closed_form_g2_exact(genus);
  if (!value.is_rational() || !value.rational_part().is_integer())
    throw std::logic_error("closed form is not an integer: " + value.to_string());
  return value.rational_part().to_integer();
}

mpz_class closed_form_sl2_level3(long genus) {
  return power(2, genus) * closed_form_g2(genus);
}

bool TrigReport::passed() const {
  return !identities.empty() &&
         std::all_of(identities.begin(), identities.end(), [](const TrigIdentity& t) { return t.ok; });
}

TrigReport trig_fixture_check(long bits) {
  const auto s = [bits](long p, long q) { return BoundedFloat::sin_pi(Rational(p, q), bits); };
  struct Fixture {
    std::string name;
    BoundedFloat lhs;
    QuadExt5 rhs;
  };
  const std::vector<Fixture> fixtures{
      {"sin^2(pi/5) = (5-sqrt5)/8", s(1, 5).pow(2), {Rational(5, 8), Rational(-1, 8)}},
      {"sin^2(2pi/5) = (5+sqrt5)/8", s(2, 5).pow(2), {Rational(5, 8), Rational(1, 8)}},
      {"sin^4(pi/5) = 5(3-sqrt5)/2^5", s(1, 5).pow(4), {Rational(15, 32), Rational(-5, 32)}},
      {"sin^4(2pi/5) = 5(3+sqrt5)/2^5", s(2, 5).pow(4), {Rational(15, 32), Rational(5, 32)}},
      {"sin^2(pi/15)sin^2(4pi/15) = (3-sqrt5)/2^5", s(1, 15).pow(2) * s(4, 15).pow(2),
       {Rational(3, 32), Rational(-1, 32)}},
      {"sin^2(2pi/15)sin^2(7pi/15) = (3+sqrt5)/2^5", s(2, 15).pow(2) * s(7, 15).pow(2),
       {Rational(3, 32), Rational(1, 32)}},
  };
  TrigReport report;
  report.bits = bits;
  for (const auto& f : fixtures) {
    const BoundedFloat rhs = to_bounded_float(f.rhs, bits);
    const BoundedFloat diff = f.lhs - rhs;
    TrigIdentity t;
    t.name = f.name;
    t.gap = std::fabs(diff.value_double());
    t.bound = f.lhs.error_double() + rhs.error_double();
    // The two enclosures overlap iff |center gap| ≤ combined error.
    t.ok = !diff.excludes_zero();
    report.identities.push_back(t);
  }
  return report;
}

bool IdentityReport::passed() const { return first_failure().empty(); }

std::string IdentityReport::first_failure() const {
  for (const auto& row : rows)
    for (const auto& c : row.checks)
      if (!c.pass)
        return "g=" + std::to_string(row.genus) + " (" + c.id + ") " + c.description + ": " + c.lhs +
               " != " + c.rhs;
  return {};
}

namespace {

IdentityRow identity_row(long g, const Options& options) {
  IdentityRow row;
  row.genus = g;
  const auto check = [&](std::string id, std::string description, const mpq_class& lhs, const mpq_class& rhs) {
    const Rational l(lhs), r(rhs);
    row.checks.push_back({std::move(id), std::move(description), l.pretty(), r.pretty(), l == r});
  };
  const mpz_class two_g = power(2, g);
  const mpz_class three_g = power(3, g);
  const mpz_class sl2_l3 = verlinde_dim(TypeTag::A(1), 3, g, options).dimension;
  const mpz_class g2_l1 = verlinde_dim(TypeTag::G2(), 1, g, options).dimension;

  check("i", "h0(SL2,L^3) = 2^g h0(G2,L)", sl2_l3, two_g * g2_l1);
  check("ii", "h0(G2,L) = closed form", g2_l1, closed_form_g2(g));
  check("iii", "h0(SL2,L) = 2^g", verlinde_dim(TypeTag::A(1), 1, g, options).dimension, two_g);
  check("iv", "h0(SL3,L) = 3^g", verlinde_dim(TypeTag::A(2), 1, g, options).dimension, three_g);
  // (3^g+1)/2 equals its integer part iff it is an integer.
  const mpz_class plus_part = (three_g + 1) / 2;
  check("v", "(3^g+1)/2 is an integer", mpq_class(three_g + 1, 2), plus_part);
  check("vi", "2^(g-1)(2^g+1) = (4^g+2^g)/2", power(2, g - 1) * (two_g + 1),
        mpq_class(power(4, g) + two_g, 2));
  check("vii", "2^(-2g) 2^g h0(SL2,L^3) = h0(G2,L)", mpq_class(two_g * sl2_l3, power(2, 2 * g)), g2_l1);
  return row;
}

}  // namespace

IdentityReport identity_suite(long genus_lo, long genus_hi, const Options& options) {
  if (genus_lo < 2 || genus_hi < genus_lo) throw UsageError("genus range must satisfy 2 <= lo <= hi");
  if (genus_hi > options.genus_cap)
    throw UsageError("genus " + std::to_string(genus_hi) + " exceeds the configured cap " +
                     std::to_string(options.genus_cap));
  IdentityReport report;
  report.genus_lo = genus_lo;
  report.genus_hi = genus_hi;
  std::vector<std::future<IdentityRow>> pending;
  for (long g = genus_lo; g <= genus_hi; ++g)
    pending.push_back(std::async(std::launch::async, identity_row, g, options));
  for (auto& f : pending) report.rows.push_back(f.get());
  return report;
}

}  // namespace gtheta::verlinde
