#include "douady/series.hpp"

#include <algorithm>

#include "douady/error.hpp"

namespace douady {

QTSeries::QTSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QTSeries QTSeries::one(int order) {
  QTSeries s(order);
  s.coeffs_[0] = CoeffPoly(1);
  return s;
}

QTSeries QTSeries::from_coefficients(int order, std::vector<CoeffPoly> coeffs) {
  QTSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i < s.coeffs_.size(); ++i) {
    s.coeffs_[i] = std::move(coeffs[i]);
  }
  return s;
}

const CoeffPoly& QTSeries::coeff(int m) const {
  if (m < 0 || m > order_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "q^" + std::to_string(m) + " outside order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(m)];
}

CoeffPoly& QTSeries::coeff_mut(int m) {
  if (m < 0 || m > order_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "q^" + std::to_string(m) + " outside order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(m)];
}

QTSeries QTSeries::truncated(int new_order) const {
  if (new_order > order_) {
    throw Error(ErrorCode::OrderMismatch, "cannot extend a series beyond its truncation order");
  }
  QTSeries s(new_order);
  for (int m = 0; m <= new_order; ++m) s.coeffs_[static_cast<std::size_t>(m)] = coeff(m);
  return s;
}

namespace {
void require_same_order(const QTSeries& a, const QTSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                              std::to_string(b.order()));
  }
}
}  // namespace

QTSeries& QTSeries::operator+=(const QTSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QTSeries& QTSeries::operator-=(const QTSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QTSeries mul(const QTSeries& a, const QTSeries& b) {
  require_same_order(a, b);
  QTSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeff_mut(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

const CoeffPoly& coeff(const QTSeries& s, int m) { return s.coeff(m); }

QTSeries specialize(const QTSeries& s, const Assignment& assignment) {
  QTSeries out(s.order());
  for (int m = 0; m <= s.order(); ++m) out.coeff_mut(m) = substitute(s.coeff(m), assignment);
  return out;
}

void FactorFamily::validate() const {
  if (weight < 0) throw Error(ErrorCode::InvalidArgument, "factor weight must be non-negative");
  for (const Affine* a : {&t_exp, &x_exp, &y_exp}) {
    // c*m + d >= 0 for all m >= 1 iff c >= 0 and c + d >= 0.
    if (a->slope < 0 || a->at(1) < 0) {
      throw Error(ErrorCode::InvalidArgument, "factor exponent negative for some m >= 1");
    }
  }
}

namespace {

// s <- s * sum_k c_k (M q^m)^k, where the sum only reaches q^order.
void multiply_by_factor(QTSeries& s, const FactorFamily& f, int m) {
  const int order = s.order();
  const int kmax = order / m;
  const Exponents e = f.exponents_at(m);
  const bool numerator = f.kind == FactorFamily::Kind::Numerator;
  if (numerator && f.weight == 0) return;

  std::vector<CoeffPoly> terms;  // c_k M^k for k = 0..kmax
  terms.reserve(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    Integer c = numerator ? binomial(f.weight, uk) : multichoose(f.weight, uk);
    if (c == 0 && numerator) break;  // binomial series terminates
    terms.push_back(CoeffPoly::monomial(Rational(c), {e[0] * k, e[1] * k, e[2] * k}));
  }

  QTSeries out(order);
  for (int j = 0; j <= order; ++j) {
    const CoeffPoly& sj = s.coeff(j);
    if (sj.is_zero()) continue;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const int target = j + m * static_cast<int>(k);
      if (target > order) break;
      out.coeff_mut(target) += sj * terms[k];
    }
  }
  s = std::move(out);
}

}  // namespace

QTSeries product_expand(const std::vector<FactorFamily>& families, int order) {
  QTSeries s = QTSeries::one(order);
  for (const auto& f : families) {
    f.validate();
    const int last = f.max_index ? std::min(*f.max_index, order) : order;
    for (int m = 1; m <= last; ++m) multiply_by_factor(s, f, m);
  }
  return s;
}

}  // namespace douady
