#pragma once

// JSON structure dumps:
//   {ring, dim_even, dim_odd, basis: [names], unit: [coeffs],
//    mult: [[i, j, [[k, coeff], ...]], ...]}
// Coefficients are decimal strings; mult lists nonzero products in (i, j) order.

#include <string>

#include <json.hpp>

#include "superschur/salg.hpp"

namespace superschur::cli {

using Json = nlohmann::ordered_json;

Json to_json(const salg::SuperAlgebra& a);

/// Throws std::invalid_argument on schema violations.
salg::SuperAlgebra from_json(const Json& j);

/// to_json(a) serialised with a trailing newline; identical algebras give
/// identical bytes.
std::string dump_text(const salg::SuperAlgebra& a);

salg::SuperAlgebra load_text(const std::string& text);

}  // namespace superschur::cli
