#include "jumploci/liealg/catalog.hpp"

#include <stdexcept>

namespace jumploci {

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra(names);
}

LieAlgebra heisenberg(std::size_t n) {
  std::vector<std::string> names;
  if (n == 1) {
    names = {"x", "y", "z"};
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("z");
  }
  LieAlgebra h(names);
  for (std::size_t i = 0; i < n; ++i) h.set_bracket(i, n + i, h.unit(2 * n));
  return h;
}

LieAlgebra aff1() {
  LieAlgebra h({"u", "x"});
  h.set_bracket(0, 1, h.unit(1));
  return h;
}

LieAlgebra borel() {
  LieAlgebra h({"H", "Xp"});
  h.set_bracket(0, 1, {0, 2});
  return h;
}

LieAlgebra sl2() {
  LieAlgebra h({"H", "Xp", "Xm"});
  h.set_bracket(0, 1, {0, 2, 0});
  h.set_bracket(0, 2, {0, 0, -2});
  h.set_bracket(1, 2, {1, 0, 0});
  return h;
}

LieAlgebra metabelian(const std::vector<JordanBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("metabelian: at least one Jordan block required");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (b.size == 0) throw std::invalid_argument("metabelian: empty Jordan block");
    n += b.size;
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("u");
  LieAlgebra h(names);
  std::size_t start = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size; ++i) {
      Vector<Rational> v(n + 1, Rational(0));
      v[start + i] = b.lambda;
      if (i > 0) v[start + i - 1] = 1;
      h.set_bracket(n, start + i, v);
    }
    start += b.size;
  }
  return h;
}

LieAlgebra catalog_algebra(const std::string& name) {
  if (name == "heis3") return heisenberg(1);
  if (name == "heis5") return heisenberg(2);
  if (name == "aff1") return aff1();
  if (name == "borel") return borel();
  if (name == "sl2") return sl2();
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) return abelian(std::stoul(name.substr(7)));
  throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian1", "abelian2", "abelian3", "heis3", "heis5", "aff1", "borel", "sl2"};
}

}  // namespace jumploci

namespace jumploci {

Matrix<Rational> sl2_to_matrix(const Vector<Rational>& g) {
  if (g.size() != 3) throw std::invalid_argument("sl2 vector must have three coordinates");
  return Matrix<Rational>{{g[0], g[1]}, {g[2], Rational(-g[0])}};
}

Vector<Rational> sl2_from_matrix(const Matrix<Rational>& m) {
  if (m.rows() != 2 || m.cols() != 2 || m(0, 0) + m(1, 1) != 0) throw std::invalid_argument("not a traceless 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0)};
}

Rational sl2_det(const Vector<Rational>& g) { return -g[0] * g[0] - g[1] * g[2]; }

}  // namespace jumploci
