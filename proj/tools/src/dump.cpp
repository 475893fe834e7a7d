#include "superschur/cli/dump.hpp"

#include <stdexcept>

namespace superschur::cli {

namespace {

std::size_t index_field(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() >= bound)
    throw std::invalid_argument(std::string("structure dump: bad ") + what + " index");
  return v.get<std::size_t>();
}

coeff::Integer coefficient(const Json& v) {
  if (!v.is_string()) throw std::invalid_argument("structure dump: coefficients must be decimal strings");
  return coeff::from_decimal(v.get<std::string>());
}

}  // namespace

Json to_json(const salg::SuperAlgebra& a) {
  const auto& m = a.carrier();
  Json j;
  j["ring"] = a.ring().to_string();
  j["dim_even"] = m.even_dim();
  j["dim_odd"] = m.odd_dim();
  j["basis"] = m.names();
  Json unit = Json::array();
  for (const auto& c : a.unit()) unit.push_back(coeff::to_decimal(c));
  j["unit"] = std::move(unit);
  Json mult = Json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const auto& cell = a.product(x, y);
      if (cell.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : cell) terms.push_back(Json::array({k, coeff::to_decimal(c)}));
      mult.push_back(Json::array({x, y, std::move(terms)}));
    }
  j["mult"] = std::move(mult);
  return j;
}

salg::SuperAlgebra from_json(const Json& j) {
  try {
    const auto ring = coeff::make_ring(j.at("ring").get<std::string>());
    const auto even = j.at("dim_even").get<std::size_t>();
    const auto odd = j.at("dim_odd").get<std::size_t>();
    const auto names = j.at("basis").get<std::vector<std::string>>();
    const std::size_t n = even + odd;
    if (names.size() != n) throw std::invalid_argument("structure dump: basis length mismatch");
    std::vector<supermod::Parity> parities(n, supermod::Parity::Odd);
    std::fill(parities.begin(), parities.begin() + static_cast<std::ptrdiff_t>(even), supermod::Parity::Even);

    const auto& unit_json = j.at("unit");
    if (!unit_json.is_array() || unit_json.size() != n)
      throw std::invalid_argument("structure dump: unit length mismatch");
    std::vector<coeff::Integer> unit;
    for (const auto& c : unit_json) unit.push_back(coefficient(c));

    std::vector<coeff::SparseVector> table(n * n);
    std::vector<bool> seen(n * n, false);
    for (const auto& entry : j.at("mult")) {
      if (!entry.is_array() || entry.size() != 3)
        throw std::invalid_argument("structure dump: mult entries are [i, j, terms]");
      const auto x = index_field(entry[0], n, "row");
      const auto y = index_field(entry[1], n, "column");
      if (seen[x * n + y]) throw std::invalid_argument("structure dump: duplicate product entry");
      seen[x * n + y] = true;
      for (const auto& term : entry[2]) {
        if (!term.is_array() || term.size() != 2)
          throw std::invalid_argument("structure dump: terms are [k, coeff]");
        table[x * n + y].push_back(
            {static_cast<std::uint32_t>(index_field(term[0], n, "result")), coefficient(term[1])});
      }
    }
    return salg::SuperAlgebra(supermod::SuperModule(ring, names, std::move(parities)), std::move(unit),
                              std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("structure dump: ") + e.what());
  }
}

std::string dump_text(const salg::SuperAlgebra& a) {
  // One product per line keeps large tables diffable.
  const Json j = to_json(a);
  std::string s = "{\n";
  for (const char* key : {"ring", "dim_even", "dim_odd", "basis", "unit"})
    s += " \"" + std::string(key) + "\": " + j[key].dump() + ",\n";
  s += " \"mult\": [";
  const auto& mult = j["mult"];
  for (std::size_t i = 0; i < mult.size(); ++i) s += (i ? ",\n  " : "\n  ") + mult[i].dump();
  s += mult.empty() ? "]\n}\n" : "\n ]\n}\n";
  return s;
}

salg::SuperAlgebra load_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("structure dump: ") + e.what());
  }
  return from_json(j);
}

}  // namespace superschur::cli
