#pragma once

#include <optional>
#include <string>
#include <vector>

#include "douady/poly.hpp"

namespace douady {

// Power series in q truncated at a fixed order N, with CoeffPoly coefficients.
// The order is part of the value: mixing orders is an OrderMismatch error.
class QTSeries {
 public:
  explicit QTSeries(int order);
  static QTSeries one(int order);
  // Takes coefficients 0..order from `coeffs`; missing entries are zero.
  static QTSeries from_coefficients(int order, std::vector<CoeffPoly> coeffs);

  int order() const noexcept { return order_; }
  const CoeffPoly& coeff(int m) const;  // throws IndexOutOfRange
  CoeffPoly& coeff_mut(int m);
  const std::vector<CoeffPoly>& coefficients() const noexcept { return coeffs_; }

  QTSeries truncated(int new_order) const;  // new_order <= order()

  QTSeries& operator+=(const QTSeries& o);
  QTSeries& operator-=(const QTSeries& o);
  friend QTSeries operator+(QTSeries a, const QTSeries& b) { return a += b; }
  friend QTSeries operator-(QTSeries a, const QTSeries& b) { return a -= b; }
  friend bool operator==(const QTSeries&, const QTSeries&) = default;

 private:
  int order_;
  std::vector<CoeffPoly> coeffs_;
};

// Truncated Cauchy product. Throws OrderMismatch.
QTSeries mul(const QTSeries& a, const QTSeries& b);
inline QTSeries operator*(const QTSeries& a, const QTSeries& b) { return mul(a, b); }

// Coefficient extraction; throws IndexOutOfRange.
const CoeffPoly& coeff(const QTSeries& s, int m);

// Applies a substitution to every coefficient.
QTSeries specialize(const QTSeries& s, const Assignment& assignment);

// Affine exponent c*m + d in the product index m.
struct Affine {
  int slope = 0;
  int offset = 0;
  int at(int m) const noexcept { return slope * m + offset; }
};

// One family of factors prod_m F(m), with M(m) = t^{t_exp(m)} x^{x_exp(m)} y^{y_exp(m)}:
//   Numerator:   F(m) = (1 + M(m) q^m)^weight
//   Denominator: F(m) = (1 - M(m) q^m)^{-weight}
struct FactorFamily {
  enum class Kind { Numerator, Denominator };

  Kind kind = Kind::Denominator;
  Affine t_exp;
  Affine x_exp;
  Affine y_exp;
  Integer weight = 0;
  // Restricts the product to m <= max_index (e.g. 1 for a single factor).
  std::optional<int> max_index;

  Exponents exponents_at(int m) const noexcept {
    return {t_exp.at(m), x_exp.at(m), y_exp.at(m)};
  }
  // Throws InvalidArgument on a negative weight or an exponent that is
  // negative for some m >= 1.
  void validate() const;
};

// Exact expansion of prod_{m=1}^{N} prod_families F(m) to order q^N.
QTSeries product_expand(const std::vector<FactorFamily>& families, int order);

}  // namespace douady
