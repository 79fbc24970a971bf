#include "douady/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "douady/error.hpp"

namespace douady {

Var parse_var(std::string_view name) {
  if (name == "t") return Var::t;
  if (name == "x") return Var::x;
  if (name == "y") return Var::y;
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

std::string_view var_name(Var v) noexcept {
  switch (v) {
    case Var::t: return "t";
    case Var::x: return "x";
    case Var::y: return "y";
  }
  return "?";
}

bool RenderOrder::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const int da = a[0] + a[1] + a[2];
  const int db = b[0] + b[1] + b[2];
  if (da != db) return da < db;
  return a > b;
}

CoeffPoly::CoeffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

CoeffPoly CoeffPoly::monomial(const Rational& c, Exponents e) {
  CoeffPoly p;
  p.add_term(e, c);
  return p;
}

Rational CoeffPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CoeffPoly::max_exponent(Var v) const noexcept {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<int>(v)]);
  return m;
}

Rational CoeffPoly::sum_of_coefficients() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void CoeffPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

CoeffPoly CoeffPoly::pow(unsigned k) const {
  CoeffPoly result(1);
  CoeffPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

namespace {

void render_monomial(std::ostream& os, const Exponents& e) {
  for (int v = 0; v < kNumVars; ++v) {
    if (e[v] == 0) continue;
    os << var_name(static_cast<Var>(v));
    if (e[v] != 1) os << '^' << e[v];
  }
}

}  // namespace

std::string CoeffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = e == Exponents{0, 0, 0};
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() == 1) {
        os << mag.get_str();
      } else {
        os << '(' << mag.get_str() << ')';
      }
    }
    render_monomial(os, e);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p) { return os << p.str(); }

CoeffPoly substitute(const CoeffPoly& p, const Assignment& assignment) {
  CoeffPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne{0, 0, 0};
    Rational coeff = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      auto it = assignment.find(static_cast<Var>(v));
      if (it == assignment.end()) {
        ne[v] += e[v];
      } else if (const auto* value = std::get_if<Rational>(&it->second)) {
        Rational pw = 1;
        for (int k = 0; k < e[v]; ++k) pw *= *value;
        coeff *= pw;
      } else {
        ne[static_cast<int>(std::get<Var>(it->second))] += e[v];
      }
    }
    out.add_term(ne, coeff);
  }
  return out;
}

}  // namespace douady
