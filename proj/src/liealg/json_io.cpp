#include "jumploci/liealg/json_io.hpp"

#include <stdexcept>

namespace jumploci {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

nlohmann::json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

LieAlgebra lie_algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim")) throw std::invalid_argument("Lie algebra JSON needs a \"dim\" field");
  auto n = j.at("dim").get<std::size_t>();
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    basis = j.at("basis").get<std::vector<std::string>>();
    if (basis.size() != n) throw std::invalid_argument("basis length differs from dim");
  } else {
    for (std::size_t i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  }
  LieAlgebra h(basis);
  if (!j.contains("brackets")) return h;
  for (const auto& b : j.at("brackets")) {
    auto l = b.at("left").get<std::size_t>(), r = b.at("right").get<std::size_t>();
    if (l >= n || r >= n) throw std::invalid_argument("bracket index out of range");
    if (l == r) throw std::invalid_argument("bracket of a basis vector with itself");
    Vector<Rational> v(n, Rational(0));
    for (const auto& [k, c] : b.at("value").items()) {
      std::size_t idx = std::stoul(k);
      if (idx >= n) throw std::invalid_argument("bracket value index out of range");
      v[idx] = rational_from_json(c);
    }
    h.set_bracket(l, r, v);
  }
  return h;
}

nlohmann::ordered_json lie_algebra_to_json(const LieAlgebra& h) {
  nlohmann::ordered_json j;
  j["dim"] = h.dim();
  j["basis"] = h.basis();
  j["brackets"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b) {
      nlohmann::ordered_json value = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (h.bracket(a, b)[k] != 0) value[std::to_string(k)] = rational_to_json(h.bracket(a, b)[k]);
      if (value.empty()) continue;
      j["brackets"].push_back({{"left", a}, {"right", b}, {"value", value}});
    }
  return j;
}

Matrix<Rational> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  Matrix<Rational> m(rows, cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j.at(r).at(c));
  }
  return m;
}

LeviInput levi_from_json(const nlohmann::json& j) {
  LeviInput l;
  l.s = lie_algebra_from_json(j.at("s"));
  l.g = lie_algebra_from_json(j.at("g"));
  for (const auto& a : j.at("action")) l.action.push_back(matrix_from_json(a));
  return l;
}

}  // namespace jumploci
