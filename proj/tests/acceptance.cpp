// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gtheta/errors.hpp"
#include "gtheta/octonion.hpp"
#include "gtheta/root_system.hpp"
#include "gtheta/trilinear.hpp"
#include "gtheta/verlinde.hpp"

using namespace gtheta;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> body;
};

mpz_class dim(roots::TypeTag type, long level, long genus) {
  return verlinde::verlinde_dim(type, level, genus).dimension;
}

std::string str(const mpz_class& n) { return n.get_str(); }

Outcome g2_genus_two() {
  Outcome o;
  const mpz_class d = dim(roots::TypeTag::G2(), 1, 2);
  o.require(d == 5, "verlinde_dim(G2,1,2) = " + str(d));
  o.require(verlinde::closed_form_g2(2) == d, "closed_form_g2(2) = " + str(verlinde::closed_form_g2(2)));
  o.detail = o.pass ? "verlinde_dim(G2,1,2) = closed_form_g2(2) = 5" : o.detail;
  return o;
}

Outcome coincidence() {
  Outcome o;
  for (long g = 2; g <= 10; ++g) {
    const mpz_class a1 = dim(roots::TypeTag::A(1), 3, g);
    const mpz_class g2 = dim(roots::TypeTag::G2(), 1, g);
    const mpz_class scaled = (mpz_class(1) << static_cast<mp_bitcnt_t>(g)) * g2;
    o.require(a1 == scaled, "g=" + std::to_string(g) + ": " + str(a1) + " != 2^g*" + str(g2));
  }
  if (o.pass) o.detail = "A1 level 3 = 2^g * G2 level 1 for g = 2..10";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (long g = 2; g <= 10; ++g) {
    const QuadExt5 exact = verlinde::detail::closed_form_g2_exact(g);
    o.require(exact.is_rational(), "g=" + std::to_string(g) + ": closed form has a sqrt5 part");
    const mpz_class g2 = dim(roots::TypeTag::G2(), 1, g);
    o.require(g2 == verlinde::closed_form_g2(g), "g=" + std::to_string(g) + ": G2 sum " + str(g2) +
                                                     " vs closed form " + str(verlinde::closed_form_g2(g)));
    const mpz_class a1 = dim(roots::TypeTag::A(1), 3, g);
    o.require(a1 == verlinde::closed_form_sl2_level3(g), "g=" + std::to_string(g) + ": A1 sum " + str(a1) +
                                                             " vs closed form " +
                                                             str(verlinde::closed_form_sl2_level3(g)));
  }
  if (o.pass) o.detail = "18 sums match their closed forms, sqrt5 parts vanish";
  return o;
}

Outcome cross_family() {
  Outcome o;
  for (long g = 2; g <= 8; ++g) {
    mpz_class two, three;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(g));
    mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(g));
    const mpz_class a1 = dim(roots::TypeTag::A(1), 1, g);
    const mpz_class a2 = dim(roots::TypeTag::A(2), 1, g);
    o.require(a1 == two, "A1 level 1 g=" + std::to_string(g) + ": " + str(a1));
    o.require(a2 == three, "A2 level 1 g=" + std::to_string(g) + ": " + str(a2));
  }
  if (o.pass) o.detail = "2^g and 3^g for g = 2..8";
  return o;
}

Outcome pairings_and_trig() {
  Outcome o;
  const auto g2 = roots::build(roots::TypeTag::G2());
  const roots::Weight rho = g2->rho_weight();
  const roots::Weight shifted = g2->fundamental_weight(0) + rho;
  const std::vector<Rational> with_rho{Rational(1, 3), Rational(1), Rational(4, 3),
                                       Rational(5, 3), Rational(2), Rational(3)};
  const std::vector<Rational> with_shift{Rational(2, 3), Rational(1), Rational(5, 3),
                                         Rational(7, 3), Rational(3), Rational(4)};
  int matched = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    const Rational a = roots::pair(g2->root(k), rho);
    const Rational b = roots::pair(g2->root(k), shifted);
    o.require(a == with_rho[k], "<alpha" + std::to_string(k + 1) + ",rho> = " + a.pretty());
    o.require(b == with_shift[k], "<alpha" + std::to_string(k + 1) + ",w1+rho> = " + b.pretty());
    matched += (a == with_rho[k]) + (b == with_shift[k]);
  }
  const verlinde::TrigReport trig = verlinde::trig_fixture_check(256);
  o.require(trig.identities.size() == 6, "expected 6 trig identities");
  for (const auto& t : trig.identities) o.require(t.ok, "trig identity " + t.name);
  if (o.pass) o.detail = std::to_string(matched) + " pairings exact, 6 trig identities within tracked error";
  return o;
}

Outcome octonion_tables() {
  using namespace octonion;
  Outcome o;
  const TableSource& src = reference_tables();
  const StructureConstants b2 = build_structure_constants(BasisId::B2);
  const StructureConstants b3 = build_structure_constants(BasisId::B3);
  const StructureConstants b0 = build_structure_constants(BasisId::B0);
  const StructureConstants printed2 = table_from_grid(BasisId::B2, src.b2);
  const StructureConstants printed3 = table_from_grid(BasisId::B3, src.b3);
  int match2 = 0, match3 = 0;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      match2 += b2.product(a, b) == printed2.product(a, b);
      match3 += b3.product(a, b) == printed3.product(a, b);
    }
  o.require(match2 == 49, "B2 table: " + std::to_string(match2) + "/49 entries");
  o.require(match3 == 49, "B3 table: " + std::to_string(match3) + "/49 entries");

  for (int la = 1; la <= 7; ++la)
    for (int lb = 1; lb <= 7; ++lb) {
      const ProductEntry& p2 = b2.product(position_of(BasisId::B2, la), position_of(BasisId::B2, lb));
      const ProductEntry& p3 = b3.product(position_of(BasisId::B3, la), position_of(BasisId::B3, lb));
      bool same = p2.real == p3.real;
      for (int lk = 1; lk <= 7; ++lk)
        same = same && p2.imag[position_of(BasisId::B2, lk)] == p3.imag[position_of(BasisId::B3, lk)];
      o.require(same, "permutation mismatch at (y" + std::to_string(la) + ",y" + std::to_string(lb) + ")");
    }

  for (std::size_t a = 0; a < 7; ++a) {
    o.require(b0.product(a, a).real == GaussSqrt2(-1), "e" + std::to_string(a + 1) + "^2 != -1");
    for (std::size_t b = 0; b < 7; ++b) {
      if (a == b) continue;
      const ProductEntry& ab = b0.product(a, b);
      const ProductEntry& ba = b0.product(b, a);
      bool anti = ab.real.is_zero() && ba.real.is_zero();
      for (std::size_t k = 0; k < 7; ++k) anti = anti && ab.imag[k] == -ba.imag[k];
      o.require(anti, "e" + std::to_string(a + 1) + "e" + std::to_string(b + 1) + " not anticommuting");
    }
  }
  if (o.pass) o.detail = "49/49 entries in both tables, permutation holds, B0 canonical";
  return o;
}

Outcome lemma_tables() {
  using namespace octonion;
  Outcome o;
  for (Lemma which : {Lemma::SL3, Lemma::SO4}) {
    const std::string name = which == Lemma::SL3 ? "SL3 lemma" : "SO4 lemma";
    const LemmaReport r = verify_lemma_tables(which);
    o.require(r.triples.size() == 35, name + ": " + std::to_string(r.triples.size()) + " triples");
    o.require(r.alternation.empty(), name + ": alternation failures");
    if (which == Lemma::SO4) o.require(!r.block_checks.empty(), name + ": no block checks");
    if (const auto f = r.first_failure()) {
      std::ostringstream os;
      os << name << ": omega(y" << f->labels[0] << ",y" << f->labels[1] << ",y" << f->labels[2] << ") = "
         << f->computed.to_string() << ", expected " << f->expected.to_string();
      o.require(false, os.str());
    }
    o.require(r.passed(), name + " failed");
  }
  if (o.pass) o.detail = "35 triples in B2 and in B3, complements vanish, block vanishing holds";
  return o;
}

Outcome engel() {
  Outcome o;
  const auto sc = octonion::build_structure_constants(octonion::BasisId::B2);
  const trilinear::AlternatingForm3 w = trilinear::from_octonion_omega(sc);
  const auto b = trilinear::engel_pairing(w);
  const octonion::Matrix7 q = octonion::gram_matrix(sc);
  const auto lambda = trilinear::proportionality_constant(b.gram, q);
  o.require(lambda.has_value() && !lambda->is_zero(), "B_omega is not a nonzero multiple of Q");
  if (lambda) {
    int equal = 0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) equal += b.gram(i, j) == *lambda * q(i, j);
    o.require(equal == 49, std::to_string(equal) + "/49 entries proportional");
  }
  o.require(trilinear::is_nondegenerate(w), "octonion form reported degenerate");
  o.require(!trilinear::is_nondegenerate(trilinear::AlternatingForm3{}), "zero form reported nondegenerate");
  if (o.pass) o.detail = "B_omega = (" + lambda->to_string() + ")*Q on 49 entries, zero form degenerate";
  return o;
}

Outcome lie_structure() {
  using namespace octonion;
  Outcome o;
  const auto b2 = build_structure_constants(BasisId::B2);
  const auto b3 = build_structure_constants(BasisId::B3);
  const DerivationAlgebra der = derivation_algebra(b2);
  o.require(der.dimension() == 14, "derivations: " + std::to_string(der.dimension()));
  for (const auto& d : der.basis_maps) o.require(satisfies_leibniz(b2, d), "Leibniz rule fails");
  o.require(closed_under_bracket(der), "derivations not closed under bracket");

  const auto p2 = [](int l) { return position_of(BasisId::B2, l); };
  const DerivationAlgebra sl3 = stabilizer_subalgebra(der, {{p2(2), p2(3), p2(4)}, {p2(5), p2(6), p2(1)}});
  o.require(sl3.dimension() == 8, "SL3 stabilizer: " + std::to_string(sl3.dimension()));
  o.require(closed_under_bracket(sl3), "SL3 stabilizer not closed");

  const DerivationAlgebra der3 = derivation_algebra(b3);
  for (const auto& d : der3.basis_maps) o.require(satisfies_leibniz(b3, d), "Leibniz rule fails in B3");
  const auto p3 = [](int l) { return position_of(BasisId::B3, l); };
  const DerivationAlgebra so4 = stabilizer_subalgebra(der3, {{p3(1), p3(2), p3(4), p3(5)}, {p3(3), p3(6), p3(7)}});
  o.require(so4.dimension() == 6, "SO4 stabilizer: " + std::to_string(so4.dimension()));
  o.require(closed_under_bracket(so4), "SO4 stabilizer not closed");
  if (o.pass) o.detail = "dim Der = 14, SL3 stabilizer 8, SO4 stabilizer 6";
  return o;
}

Outcome dynkin() {
  using namespace roots;
  Outcome o;
  const Rational g2 = dynkin_index(build(TypeTag::G2())->from_fundamental({1, 0}));
  o.require(g2 == Rational(2), "G2 w1: " + g2.pretty());
  const Rational sl2 = dynkin_index(build(TypeTag::A(1))->from_fundamental({2}));
  o.require(sl2 == Rational(4), "sl2 adjoint: " + sl2.pretty());
  for (int n = 1; n <= 4; ++n) {
    IntVector defining(static_cast<std::size_t>(n), 0);
    defining[0] = 1;
    const Rational d = dynkin_index(build(TypeTag::A(n))->from_fundamental(defining));
    o.require(d == Rational(1), "sl" + std::to_string(n + 1) + " defining: " + d.pretty());
  }
  for (const auto& type : {TypeTag::A(1), TypeTag::A(2), TypeTag::G2()}) {
    const auto rs = build(type);
    const Rational d = dynkin_index(rs->theta_weight());
    o.require(d == Rational(2 * rs->dual_coxeter()), type.to_string() + " adjoint: " + d.pretty());
  }
  if (o.pass) o.detail = "G2 w1 = 2, sl2 adjoint = 4, sl2..sl5 defining = 1, adjoint = 2g*";
  return o;
}

Outcome integer_identities() {
  Outcome o;
  const verlinde::IdentityReport report = verlinde::identity_suite(2, 12);
  int checked = 0;
  for (const auto& row : report.rows)
    for (const auto& c : row.checks) {
      if (c.id != "v" && c.id != "vi" && c.id != "vii") continue;
      ++checked;
      o.require(c.pass, "g=" + std::to_string(row.genus) + " (" + c.id + "): " + c.lhs + " != " + c.rhs);
    }
  o.require(checked == 33, std::to_string(checked) + " checks found, expected 33");
  if (o.pass) o.detail = "33 checks (v)-(vii) for g = 2..12";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "G2 level 1 genus 2, exact", 1.0, g2_genus_two},
      {2, "level-3/level-1 coincidence", 10.0, coincidence},
      {3, "closed-form agreement", 0, closed_forms},
      {4, "cross-family checks", 0, cross_family},
      {5, "Killing pairings and trig fixtures", 0, pairings_and_trig},
      {6, "octonion tables", 0, octonion_tables},
      {7, "lemma tables", 0, lemma_tables},
      {8, "Engel pairing", 0, engel},
      {9, "Lie-theoretic structure", 0, lie_structure},
      {10, "Dynkin indices", 0, dynkin},
      {11, "integer-identity suite", 1.0, integer_identities},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) {
      o.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit) + " s");
    }
    failures += !o.pass;
    std::printf("%s  %2d  %-36s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
