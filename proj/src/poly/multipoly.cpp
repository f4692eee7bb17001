#include "jumploci/poly/multipoly.hpp"

#include <algorithm>

namespace jumploci {

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  if (index >= vars.size()) throw std::out_of_range("MultiPoly::variable: index out of range");
  MultiPoly p(std::move(vars));
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) { return variable(std::vector<std::string>{name}, 0); }

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

std::optional<std::size_t> MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

Rational MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (unsigned x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
  return d;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> target(vars_.size(), vars.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) target[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] == vars.size())
        throw std::invalid_argument("MultiPoly::with_variables: variable '" + vars_[i] + "' would be dropped");
      ne[target[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> vars = vars_;
  for (auto& v : vars) {
    auto it = names.find(v);
    if (it != names.end()) v = it->second;
  }
  std::vector<std::string> uniq = merge_variables({}, vars);
  if (uniq.size() == vars.size()) {
    MultiPoly out = *this;
    out.vars_ = std::move(vars);
    return out;
  }
  // Two variables were merged into one name.
  std::vector<MultiPoly> images;
  for (const auto& v : vars) images.push_back(variable(uniq, static_cast<std::size_t>(
                                                                 std::find(uniq.begin(), uniq.end(), v) - uniq.begin())));
  return substitute(images);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("MultiPoly::substitute: wrong number of images");
  std::vector<std::string> vars;
  for (const auto& im : images) vars = merge_variables(vars, im.vars_);
  MultiPoly out(vars);
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(vars, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i].with_variables(vars));
      t *= pw[e[i]];
    }
    out += t;
  }
  return out.with_variables(vars);
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  std::vector<MultiPoly> full;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = images.find(vars_[i]);
    full.push_back(it != images.end() ? it->second : variable(vars_, i));
  }
  return substitute(full);
}

UPoly MultiPoly::to_upoly(std::size_t var) const {
  std::vector<Rational> c;
  for (const auto& [e, v] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("MultiPoly::to_upoly: more than one variable occurs");
    unsigned k = e.empty() ? 0 : e.at(var);
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += v;
  }
  return UPoly(c);
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, std::vector<std::string> vars, std::size_t var) {
  MultiPoly out(std::move(vars));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Exponents e(out.nvars(), 0);
    e.at(var) = static_cast<unsigned>(k);
    out.add_term(e, p.coeffs()[k]);
  }
  return out;
}

void MultiPoly::align_with(MultiPoly& o) {
  if (vars_ == o.vars_) return;
  std::vector<std::string> vars = merge_variables(vars_, o.vars_);
  *this = with_variables(vars);
  o = o.with_variables(vars);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly b = o;
  align_with(b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  MultiPoly b = o;
  align_with(b);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly b = o;
  align_with(b);
  MultiPoly out(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  MultiPoly x = a, y = b;
  x.align_with(y);
  return x.terms_ == y.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string body = mono.empty() ? mag.get_str() : mag.get_str() + "*" + mono;
    if (first) s = (c < 0 ? "-" : "") + body;
    else s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

}  // namespace jumploci
