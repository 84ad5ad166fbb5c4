#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtheta/errors.hpp"
#include "gtheta/verlinde.hpp"

using namespace gtheta;
using namespace gtheta::verlinde;

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

TEST_CASE("alcove weights") {
  const auto g2 = roots::build(TypeTag::G2());
  const LevelData g2_1 = alcove_weights(g2, 1);
  REQUIRE(g2_1.alcove.size() == 2);
  CHECK(g2_1.alcove[0] == g2->from_fundamental({0, 0}));
  CHECK(g2_1.alcove[1] == g2->from_fundamental({1, 0}));

  const auto a1 = roots::build(TypeTag::A(1));
  const LevelData a1_3 = alcove_weights(a1, 3);
  REQUIRE(a1_3.alcove.size() == 4);
  for (long k = 0; k < 4; ++k) {
    CHECK(a1_3.alcove[k] == a1->from_fundamental({k}));
    CHECK(pair(a1->root(0), a1_3.alcove[k] + a1->rho_weight()) == Rational(k + 1));
  }
  for (long l = 1; l <= 6; ++l) CHECK(alcove_weights(a1, l).alcove.size() == static_cast<std::size_t>(l + 1));

  const auto a2 = roots::build(TypeTag::A(2));
  const LevelData a2_1 = alcove_weights(a2, 1);
  REQUIRE(a2_1.alcove.size() == 3);
  CHECK(a2_1.alcove[1] == a2->from_fundamental({0, 1}));
  CHECK(a2_1.alcove[2] == a2->from_fundamental({1, 0}));
  for (const auto& mu : alcove_weights(a2, 3).alcove) {
    CHECK(mu.is_dominant());
    CHECK(pair(mu, a2->theta_weight()) <= Rational(3));
  }
  CHECK_THROWS_AS(alcove_weights(a1, 0), UsageError);
}

TEST_CASE("torus count") {
  CHECK(torus_count(roots::build(TypeTag::G2()), 1) == 75);
  CHECK(torus_count(roots::build(TypeTag::A(1)), 3) == 10);
  CHECK(torus_count(roots::build(TypeTag::A(1)), 1) == 6);
}

TEST_CASE("verlinde dimension examples") {
  const VerlindeResult g2 = verlinde_dim(TypeTag::G2(), 1, 2);
  CHECK(g2.dimension == 5);
  CHECK(g2.residual < 1e-9);
  CHECK(g2.precision_bits_used >= 256);
  for (long g = 2; g <= 10; ++g) CHECK(verlinde_dim(TypeTag::A(1), 1, g).dimension == pow_ui(2, g));
  CHECK(verlinde_dim(TypeTag::A(2), 1, 3).dimension == 27);
}

TEST_CASE("verlinde dimension against the mpmath oracle") {
  // Frozen from tests/oracle/verlinde_oracle.py.
  struct Case {
    TypeTag type;
    long level, genus;
    const char* expected;
  };
  const std::vector<Case> cases{
      {TypeTag::A(1), 2, 2, "10"},    {TypeTag::A(1), 2, 3, "36"},
      {TypeTag::A(1), 4, 2, "35"},    {TypeTag::A(1), 4, 5, "42065"},
      {TypeTag::A(2), 2, 2, "45"},    {TypeTag::A(2), 2, 4, "4050"},
      {TypeTag::G2(), 2, 2, "30"},    {TypeTag::G2(), 2, 3, "414"},
      {TypeTag::G2(), 1, 12, "1390625"}, {TypeTag::A(1), 3, 12, "5696000000"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.type.to_string());
    CAPTURE(c.level);
    CAPTURE(c.genus);
    CHECK(verlinde_dim(c.type, c.level, c.genus).dimension == mpz_class(c.expected));
  }
}

TEST_CASE("verlinde preconditions") {
  CHECK_THROWS_AS(verlinde_dim(TypeTag::G2(), 1, 1), UsageError);
  CHECK_THROWS_AS(verlinde_dim(TypeTag::G2(), 1, 0), UsageError);
  CHECK_THROWS_AS(verlinde_dim(TypeTag::G2(), 0, 2), UsageError);
  CHECK_THROWS_AS(verlinde_dim(TypeTag::G2(), 1, 13), UsageError);
}

TEST_CASE("certification failure past the precision cap") {
  Options tight;
  tight.start_bits = 64;
  tight.precision_cap = 64;
  try {
    verlinde_dim(TypeTag::G2(), 1, 2, tight);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.precision_bits() == 64);
  }
}

TEST_CASE("certified integrality and monotonicity over the supported range") {
  for (const auto& type : {TypeTag::A(1), TypeTag::A(2), TypeTag::G2()}) {
    for (long level = 1; level <= 4; ++level) {
      mpz_class previous = 0;
      for (long g = 2; g <= 12; g += (type.family == roots::Family::A && type.rank == 1) ? 1 : 5) {
        const VerlindeResult r = verlinde_dim(type, level, g);
        CHECK(r.residual < 1e-9 * std::max(1.0, r.dimension.get_d()));
        CHECK(r.dimension >= previous);
        previous = r.dimension;
      }
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_g2(2) == 5);
  CHECK(closed_form_g2(3) == 15);
  CHECK(verlinde::detail::closed_form_g2_exact(1) == QuadExt5(2));
  CHECK_THROWS_AS(closed_form_g2(1), UsageError);
  CHECK(closed_form_sl2_level3(2) == 20);
  CHECK(closed_form_sl2_level3(3) == 120);
  for (long g = 2; g <= 12; ++g) {
    CHECK(closed_form_sl2_level3(g) == pow_ui(2, g) * closed_form_g2(g));
    // Conjugation swaps the two summands and fixes the sum.
    const QuadExt5 plus{Rational(5, 2), Rational(1, 2)};
    CHECK(plus.pow(g - 1).conjugate() == plus.conjugate().pow(g - 1));
    CHECK(verlinde::detail::closed_form_g2_exact(g).conjugate() == verlinde::detail::closed_form_g2_exact(g));
  }
}

TEST_CASE("trig fixtures") {
  const TrigReport report = trig_fixture_check(256);
  REQUIRE(report.identities.size() == 6);
  CHECK(report.passed());
  for (const auto& t : report.identities) {
    CAPTURE(t.name);
    CHECK(t.bound < 1e-70);
    CHECK(t.gap <= t.bound);
  }
  // Sum of the two exact squares is 5/4.
  const BoundedFloat sum = BoundedFloat::sin_pi(Rational(1, 5), 256).pow(2) +
                           BoundedFloat::sin_pi(Rational(2, 5), 256).pow(2);
  CHECK_FALSE((sum - BoundedFloat::from_rational(Rational(5, 4), 256)).excludes_zero());
}

TEST_CASE("identity suite") {
  const IdentityReport report = identity_suite(2, 4);
  CHECK(report.passed());
  REQUIRE(report.rows.size() == 3);
  const auto& g2 = report.rows[0];
  CHECK(g2.genus == 2);
  CHECK(g2.checks.size() == 7);
  CHECK(g2.checks[0].lhs == "20");
  CHECK(g2.checks[0].rhs == "20");
  CHECK(g2.checks[4].lhs == "5");
  CHECK(g2.checks[5].lhs == "10");
  CHECK(report.first_failure().empty());
  CHECK_THROWS_AS(identity_suite(1, 3), UsageError);
  CHECK_THROWS_AS(identity_suite(4, 3), UsageError);
}
