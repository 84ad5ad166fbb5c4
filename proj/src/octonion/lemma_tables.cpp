#include <algorithm>
#include <map>

#include "gtheta/octonion.hpp"

namespace gtheta::octonion {
namespace {

using Triple = std::array<int, 3>;

struct ListedValue {
  Triple labels;
  GaussSqrt2 value;
};

int permutation_sign(Triple t) {
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  return sign;
}

std::vector<ListedValue> listed_values(Lemma which) {
  const GaussSqrt2 r2 = GaussSqrt2::sqrt2();
  const GaussSqrt2 i = GaussSqrt2::i();
  if (which == Lemma::SL3)
    return {{{2, 3, 4}, -r2}, {{5, 6, 1}, -r2}, {{2, 5, 7}, i}, {{3, 6, 7}, i}, {{4, 1, 7}, i}};
  return {{{2, 4, 3}, r2}, {{5, 1, 6}, r2}, {{4, 1, 7}, i}, {{2, 5, 7}, i}, {{3, 6, 7}, i}};
}

// Expected ω on positions, keyed by the position-sorted triple.
std::map<Triple, GaussSqrt2> expected_by_positions(Lemma which, BasisId basis) {
  std::map<Triple, GaussSqrt2> out;
  for (const auto& lv : listed_values(which)) {
    Triple pos;
    for (int k = 0; k < 3; ++k) pos[k] = static_cast<int>(position_of(basis, lv.labels[k]));
    const int sign = permutation_sign(pos);
    std::sort(pos.begin(), pos.end());
    out[pos] = sign > 0 ? lv.value : -lv.value;
  }
  return out;
}

Triple labels_of(BasisId basis, const Triple& pos) {
  const auto& labels = basis_labels(basis);
  return {labels[pos[0]], labels[pos[1]], labels[pos[2]]};
}

}  // namespace

bool LemmaReport::passed() const { return !first_failure().has_value(); }

std::optional<TripleCheck> LemmaReport::first_failure() const {
  for (const auto* list : {&triples, &alternation, &block_checks})
    for (const auto& t : *list)
      if (!t.ok) return t;
  return std::nullopt;
}

LemmaReport verify_lemma_tables(Lemma which, const TableSource& source) {
  LemmaReport report;
  report.which = which;
  report.basis = which == Lemma::SL3 ? BasisId::B2 : BasisId::B3;
  const BasisId basis = report.basis;
  const StructureConstants sc = build_structure_constants(basis, source);
  const auto expected = expected_by_positions(which, basis);

  const auto omega = [&](const Triple& pos) {
    return trilinear_omega(sc, Octonion::unit(basis, pos[0]), Octonion::unit(basis, pos[1]),
                           Octonion::unit(basis, pos[2]));
  };

  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        const Triple pos{a, b, c};
        TripleCheck check;
        check.labels = labels_of(basis, pos);
        const auto it = expected.find(pos);
        check.expected = it == expected.end() ? GaussSqrt2() : it->second;
        check.computed = omega(pos);
        check.ok = check.computed == check.expected;
        if (!check.computed.is_zero()) ++report.nonzero_orbits;
        report.triples.push_back(check);

        // Alternation is verified on every reordering, not assumed.
        Triple perm = pos;
        while (std::next_permutation(perm.begin(), perm.end())) {
          const GaussSqrt2 value = omega(perm);
          const GaussSqrt2 want = permutation_sign(perm) > 0 ? check.computed : -check.computed;
          if (value == want) continue;
          report.alternation.push_back({labels_of(basis, perm), want, value, false});
        }
      }

  if (which == Lemma::SO4) {
    const std::vector<int> tensor_part{1, 2, 4, 5};  // E*⊗F
    const std::vector<int> traceless_part{3, 6, 7};  // End0(F)
    const auto add_block_check = [&](Triple labels) {
      Triple pos;
      for (int k = 0; k < 3; ++k) pos[k] = static_cast<int>(position_of(basis, labels[k]));
      TripleCheck check{labels, GaussSqrt2(), omega(pos), false};
      check.ok = check.computed.is_zero();
      report.block_checks.push_back(check);
    };
    for (std::size_t i = 0; i < tensor_part.size(); ++i)
      for (std::size_t j = i + 1; j < tensor_part.size(); ++j)
        for (std::size_t k = j + 1; k < tensor_part.size(); ++k)
          add_block_check({tensor_part[i], tensor_part[j], tensor_part[k]});
    for (int t : tensor_part)
      for (std::size_t i = 0; i < traceless_part.size(); ++i)
        for (std::size_t j = i + 1; j < traceless_part.size(); ++j)
          add_block_check({t, traceless_part[i], traceless_part[j]});
  }
  return report;
}

}  // namespace gtheta::octonion
