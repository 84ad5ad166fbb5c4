#include "gtheta/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "gtheta/errors.hpp"

namespace gtheta::roots {
namespace {

ExactMatrix<Rational> simple_gram(TypeTag type) {
  const auto n = static_cast<std::size_t>(type.rank);
  ExactMatrix<Rational> g(n, n);
  if (type.family == Family::G2) {
    // α₁ short, α₂ long, long roots of squared length 2.
    g(0, 0) = Rational(2, 3);
    g(1, 1) = Rational(2);
    g(0, 1) = g(1, 0) = Rational(-1);
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = Rational(2);
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = Rational(-1);
  }
  return g;
}

long height(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// Positive roots from simple-root strings: β + α_i is a root iff q > 0 in
// the α_i-string β − pα_i, …, β + qα_i, with p − q = ⟨β, α_i^∨⟩.
std::vector<IntVector> generate_positive_roots(const ExactMatrix<Rational>& cartan) {
  const std::size_t n = cartan.rows();
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<IntVector> all = layer;
  while (!layer.empty()) {
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        // ⟨β, α_i^∨⟩ = Σ_j β_j · a_ji
        Rational pairing;
        for (std::size_t j = 0; j < n; ++j) pairing += Rational(beta[j]) * cartan(j, i);
        const Rational q = Rational(p) - pairing;
        if (q <= Rational(0)) continue;
        IntVector up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const IntVector& a, const IntVector& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;
  });
  return all;
}

// Index of the sublattice spanned by `vectors` inside Z^n (0 if not full rank),
// by integer row reduction.
long lattice_index(std::vector<IntVector> vectors, std::size_t n) {
  long index = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    // Euclid on column `col` over rows ≥ row until one nonzero entry remains.
    while (true) {
      std::size_t best = vectors.size();
      for (std::size_t r = row; r < vectors.size(); ++r)
        if (vectors[r][col] != 0 && (best == vectors.size() || std::labs(vectors[r][col]) < std::labs(vectors[best][col])))
          best = r;
      if (best == vectors.size()) return 0;
      std::swap(vectors[row], vectors[best]);
      bool reduced = true;
      for (std::size_t r = row + 1; r < vectors.size(); ++r) {
        const long f = vectors[r][col] / vectors[row][col];
        for (std::size_t c = 0; c < n; ++c) vectors[r][c] -= f * vectors[row][c];
        if (vectors[r][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    index *= std::labs(vectors[row][col]);
    ++row;
  }
  return index;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void require_same_system(const Weight& a, const Weight& b) {
  if (!a.system || !b.system || !(a.system->type() == b.system->type()))
    throw UsageError("weights belong to different root systems");
}

void require_dominant(const Weight& w) {
  if (!w.is_dominant()) throw UsageError("weight is not dominant");
}

}  // namespace

TypeTag TypeTag::parse(std::string_view name) {
  if (name == "G2") return G2();
  if (name.size() >= 2 && name[0] == 'A') {
    const std::string digits(name.substr(1));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits[0] != '0') {
      const long n = std::stol(digits);
      if (n >= 1 && n <= 64) return A(static_cast<int>(n));
    }
  }
  throw UsageError("unsupported algebra '" + std::string(name) + "' (expected A<n> or G2)");
}

std::string TypeTag::to_string() const {
  return family == Family::G2 ? "G2" : "A" + std::to_string(rank);
}

Weight Weight::operator+(const Weight& o) const {
  require_same_system(*this, o);
  Weight out = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
  return out;
}

Weight Weight::operator*(const Rational& s) const {
  Weight out = *this;
  for (auto& c : out.coords) c *= s;
  return out;
}

RationalVector Weight::fundamental_coords() const {
  const auto& g = system->gram_simple();
  RationalVector out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    RationalVector simple(coords.size(), Rational(0));
    simple[i] = Rational(1);
    out.push_back(Rational(2) * system->pair(coords, simple) / g(i, i));
  }
  return out;
}

bool Weight::is_dominant() const {
  const auto c = fundamental_coords();
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0 && x.is_integer(); });
}

Rational RootSystem::pair(const RationalVector& x, const RationalVector& y) const {
  Rational out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out += x[i] * gram_(i, j) * y[j];
  }
  return out;
}

Weight RootSystem::weight(RationalVector simple_coords) const {
  if (simple_coords.size() != static_cast<std::size_t>(rank())) throw UsageError("weight has wrong rank");
  return {std::move(simple_coords), shared_from_this()};
}

Weight RootSystem::root(std::size_t index) const { return weight(to_rational(positive_.at(index))); }

Weight RootSystem::theta_weight() const { return weight(to_rational(theta_)); }

Weight RootSystem::from_fundamental(const IntVector& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank())) throw UsageError("weight has wrong rank");
  RationalVector out(coords.size(), Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) out[j] += Rational(coords[i]) * fundamental_[i][j];
  return weight(std::move(out));
}

RootSystemPtr build(TypeTag type) {
  if (type.rank < 1 || (type.family == Family::G2 && type.rank != 2))
    throw UsageError("unsupported root system type");

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->gram_ = simple_gram(type);
  const auto n = static_cast<std::size_t>(type.rank);

  // a_ij = 2⟨α_i, α_j⟩ / ⟨α_j, α_j⟩
  rs->cartan_ = ExactMatrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs->cartan_(i, j) = Rational(2) * rs->gram_(i, j) / rs->gram_(j, j);

  rs->positive_ = generate_positive_roots(rs->cartan_);
  rs->theta_ = rs->positive_.back();

  // ⟨ϖ_i, α_k^∨⟩ = δ_ik, i.e. the rows of the inverse Cartan matrix.
  const ExactMatrix<Rational> inv = rs->cartan_.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector w;
    for (std::size_t j = 0; j < n; ++j) w.push_back(inv(i, j));
    rs->fundamental_.push_back(std::move(w));
  }

  rs->rho_.assign(n, Rational(0));
  for (const auto& root : rs->positive_)
    for (std::size_t j = 0; j < n; ++j) rs->rho_[j] += Rational(root[j], 2);

  RationalVector weight_sum(n, Rational(0));
  for (const auto& w : rs->fundamental_)
    for (std::size_t j = 0; j < n; ++j) weight_sum[j] += w[j];
  if (weight_sum != rs->rho_) throw ConstructionError("rho differs from the sum of fundamental weights");

  const RationalVector theta = to_rational(rs->theta_);
  if (rs->pair(theta, theta) != Rational(2)) throw ConstructionError("highest root is not normalized");
  rs->dual_coxeter_ = (rs->pair(rs->rho_, theta) + Rational(1)).to_integer().get_si();
  rs->center_order_ = rs->cartan_.determinant().to_integer().get_si();

  std::vector<IntVector> long_roots;
  for (const auto& root : rs->positive_) {
    const RationalVector r = to_rational(root);
    if (rs->pair(r, r) == Rational(2)) long_roots.push_back(root);
  }
  rs->long_index_ = lattice_index(long_roots, n);
  return rs;
}

Rational pair(const Weight& x, const Weight& y) {
  require_same_system(x, y);
  return x.system->pair(x.coords, y.coords);
}

mpz_class weyl_dim(const Weight& lambda) {
  require_dominant(lambda);
  const RootSystem& rs = *lambda.system;
  const Weight shifted = lambda + rs.rho_weight();
  Rational product(1);
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Weight alpha = rs.root(k);
    product *= pair(shifted, alpha) / pair(rs.rho_weight(), alpha);
  }
  return product.to_integer();
}

Rational dynkin_index(const Weight& lambda) {
  require_dominant(lambda);
  const RootSystem& rs = *lambda.system;
  const Weight two_rho = rs.rho_weight() * Rational(2);
  return Rational(weyl_dim(lambda)) * pair(lambda, lambda + two_rho) / Rational(rs.dimension());
}

}  // namespace gtheta::roots
