#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "douady/rational.hpp"

namespace douady {

// Cohomological bookkeeping variables: t for Poincare polynomials, x and y
// for Hodge bidegrees.
enum class Var : int { t = 0, x = 1, y = 2 };
inline constexpr int kNumVars = 3;

Var parse_var(std::string_view name);  // throws UnknownVariable
std::string_view var_name(Var v) noexcept;

using Exponents = std::array<int, kNumVars>;

// Exponent order used for storage and rendering: increasing total degree, then
// decreasing t, x, y exponents (so x^2 precedes xy precedes y^2).
struct RenderOrder {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

// Sparse polynomial in t, x, y with exact rational coefficients. Zero
// coefficients are never stored.
class CoeffPoly {
 public:
  using Terms = std::map<Exponents, Rational, RenderOrder>;

  CoeffPoly() = default;
  CoeffPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed
  CoeffPoly(long c) : CoeffPoly(Rational(c)) {}  // NOLINT
  static CoeffPoly monomial(const Rational& c, Exponents e);
  static CoeffPoly t_power(int k, const Rational& c = 1) { return monomial(c, {k, 0, 0}); }
  static CoeffPoly xy_power(int p, int q, const Rational& c = 1) { return monomial(c, {0, p, q}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  Rational t_coefficient(int k) const { return coefficient({k, 0, 0}); }
  // Largest exponent of v among stored terms; -1 for the zero polynomial.
  int max_exponent(Var v) const noexcept;
  Rational sum_of_coefficients() const;

  void add_term(const Exponents& e, const Rational& c);

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const Rational& c);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(CoeffPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

  CoeffPoly pow(unsigned k) const;

  // Canonical text, e.g. "1 + 2t^2 + 3t^4", "1 - t", "(1/2)x^2y", "0".
  std::string str() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p);

// Substitution target for one variable: an exact value or another variable.
using Substitution = std::variant<Rational, Var>;
using Assignment = std::map<Var, Substitution>;

CoeffPoly substitute(const CoeffPoly& p, const Assignment& assignment);

}  // namespace douady
