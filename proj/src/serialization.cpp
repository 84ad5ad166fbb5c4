#include "gtheta/serialization.hpp"

#include "gtheta/errors.hpp"

namespace gtheta {

using nlohmann::json;

json to_json(const GaussSqrt2& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(c.to_string());
  return out;
}

GaussSqrt2 gauss_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw UsageError("expected 4 rational strings");
  GaussSqrt2::Coords c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = Rational::parse(j[k].get<std::string>());
  return GaussSqrt2(c);
}

json to_json(const octonion::StructureConstants& sc) {
  json entries = json::array();
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      const auto& p = sc.product(a, b);
      json imag = json::array();
      for (const auto& c : p.imag) imag.push_back(to_json(c));
      entries.push_back({{"i", a + 1}, {"j", b + 1}, {"real", to_json(p.real)}, {"imag", imag}});
    }
  return {{"basis", std::string(octonion::to_string(sc.basis()))}, {"entries", entries}};
}

octonion::StructureConstants structure_constants_from_json(const json& j) {
  const auto basis = octonion::parse_basis(j.at("basis").get<std::string>());
  octonion::StructureConstants::Table table;
  for (const auto& e : j.at("entries")) {
    const auto a = e.at("i").get<std::size_t>() - 1;
    const auto b = e.at("j").get<std::size_t>() - 1;
    if (a >= 7 || b >= 7) throw UsageError("structure constant index out of range");
    auto& p = table[a][b];
    p.real = gauss_from_json(e.at("real"));
    const auto& imag = e.at("imag");
    if (imag.size() != 7) throw UsageError("expected 7 imaginary coordinates");
    for (std::size_t k = 0; k < 7; ++k) p.imag[k] = gauss_from_json(imag[k]);
  }
  return {basis, table};
}

json to_json(const trilinear::AlternatingForm3& w, octonion::BasisId basis) {
  json entries = json::array();
  for (const auto& [t, v] : w.entries())
    entries.push_back({{"i", t[0] + 1}, {"j", t[1] + 1}, {"k", t[2] + 1}, {"value", to_json(v)}});
  return {{"basis", std::string(octonion::to_string(basis))}, {"entries", entries}};
}

trilinear::AlternatingForm3 form_from_json(const json& j) {
  trilinear::AlternatingForm3 w;
  for (const auto& e : j.at("entries"))
    w.set(e.at("i").get<int>() - 1, e.at("j").get<int>() - 1, e.at("k").get<int>() - 1,
          gauss_from_json(e.at("value")));
  return w;
}

}  // namespace gtheta
