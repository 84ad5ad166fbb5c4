#pragma once

#include <json.hpp>

#include "gtheta/octonion.hpp"
#include "gtheta/trilinear.hpp"

namespace gtheta {

// Q(i,√2) elements travel as four "p/q" strings on the basis {1, i, √2, i√2}.
nlohmann::json to_json(const GaussSqrt2& x);
GaussSqrt2 gauss_from_json(const nlohmann::json& j);

// {basis, entries: [{i, j, real, imag: [7 × value]}]}, i and j 1-based positions.
nlohmann::json to_json(const octonion::StructureConstants& sc);
octonion::StructureConstants structure_constants_from_json(const nlohmann::json& j);

// {basis, entries: [{i, j, k, value}]}, sorted 1-based triples.
nlohmann::json to_json(const trilinear::AlternatingForm3& w, octonion::BasisId basis);
trilinear::AlternatingForm3 form_from_json(const nlohmann::json& j);

}  // namespace gtheta
