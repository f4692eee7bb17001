#include "jumploci/cdga/json_io.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "jumploci/liealg/json_io.hpp"

namespace jumploci {

CDGA cdga_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degrees")) throw std::invalid_argument("CDGA JSON needs a \"degrees\" field");
  auto degrees = j.at("degrees").get<std::vector<std::vector<std::string>>>();
  while (degrees.size() > 1 && degrees.back().empty()) degrees.pop_back();
  std::set<std::string> seen;
  for (const auto& d : degrees)
    for (const auto& n : d)
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate basis name '" + n + "'");
  CDGA a(degrees);

  auto value_of = [&](const nlohmann::json& v, int degree) {
    SparseVec out;
    for (const auto& [name, c] : v.items()) {
      auto [deg, idx] = a.locate(name);
      if (deg != degree)
        throw std::invalid_argument("'" + name + "' has degree " + std::to_string(deg) + ", expected " +
                                    std::to_string(degree));
      out.emplace_back(idx, rational_from_json(c));
    }
    return out;
  };

  std::map<std::pair<std::string, std::string>, std::size_t> given;
  if (j.contains("products")) {
    const auto& prods = j.at("products");
    for (std::size_t n = 0; n < prods.size(); ++n) {
      const auto& p = prods[n];
      auto l = p.at("left").get<std::string>(), r = p.at("right").get<std::string>();
      auto [i, x] = a.locate(l);
      auto [k, y] = a.locate(r);
      if (i == 0 || k == 0) throw std::invalid_argument("products with the unit are implicit");
      if (given.count({r, l})) {
        // Must agree with the filled-in reversed product.
        Vector<Rational> expect(a.dim(i + k), Rational(0)), got(a.dim(i + k), Rational(0));
        for (const auto& [idx, c] : a.product(i, x, k, y)) expect[idx] += c;
        for (const auto& [idx, c] : value_of(p.at("value"), i + k)) got[idx] += c;
        if (expect != got) throw std::invalid_argument("products " + l + "*" + r + " and " + r + "*" + l + " are not graded commutative");
        continue;
      }
      given[{l, r}] = n;
      a.set_product(i, x, k, y, value_of(p.at("value"), i + k));
    }
  }
  if (j.contains("differential")) {
    std::vector<Matrix<Rational>> d;
    for (int i = 0; i <= a.top_degree(); ++i) d.emplace_back(a.dim(i + 1), a.dim(i), Rational(0));
    for (const auto& e : j.at("differential")) {
      auto [i, x] = a.locate(e.at("source").get<std::string>());
      for (const auto& [k, c] : value_of(e.at("value"), i + 1)) d[static_cast<std::size_t>(i)](k, x) += c;
    }
    for (int i = 0; i <= a.top_degree(); ++i) a.set_differential(i, d[static_cast<std::size_t>(i)]);
  }
  return a;
}

nlohmann::ordered_json cdga_to_json(const CDGA& a) {
  nlohmann::ordered_json j;
  j["degrees"] = nlohmann::ordered_json::array();
  for (int i = 0; i <= a.top_degree(); ++i) j["degrees"].push_back(a.basis(i));
  j["products"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= a.top_degree(); ++i)
    for (int k = i; i + k <= a.top_degree(); ++k)
      for (std::size_t x = 0; x < a.dim(i); ++x)
        for (std::size_t y = (k == i ? x : 0); y < a.dim(k); ++y) {
          const auto& v = a.product(i, x, k, y);
          if (v.empty()) continue;
          nlohmann::ordered_json value = nlohmann::ordered_json::object();
          for (const auto& [idx, c] : v) value[a.basis(i + k)[idx]] = rational_to_json(c);
          j["products"].push_back({{"left", a.basis(i)[x]}, {"right", a.basis(k)[y]}, {"value", value}});
        }
  j["differential"] = nlohmann::ordered_json::array();
  for (int i = 0; i < a.top_degree(); ++i)
    for (std::size_t x = 0; x < a.dim(i); ++x) {
      nlohmann::ordered_json value = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < a.dim(i + 1); ++k)
        if (a.d(i)(k, x) != 0) value[a.basis(i + 1)[k]] = rational_to_json(a.d(i)(k, x));
      if (!value.empty()) j["differential"].push_back({{"source", a.basis(i)[x]}, {"value", value}});
    }
  return j;
}

}  // namespace jumploci
