#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "douady/rational.hpp"

namespace douady {

// Element of Q(i) with exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  // Accepts "3", "-1/2", "2i", "-i", "1/2+3/4i", "1-i"; no embedded spaces.
  // Throws ParseError.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;  // throws ZeroScalar

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); used only to canonicalize support cycles.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussianRational pow(unsigned k) const;
  std::string str() const;

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Dense matrix over Q(i).
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  GaussianMatrix(std::size_t rows, std::size_t cols);
  static GaussianMatrix identity(std::size_t n);
  static GaussianMatrix diagonal(const std::vector<GaussianRational>& d);
  static GaussianMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
  static GaussianMatrix column(const std::vector<GaussianRational>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<GaussianRational> column_vector(std::size_t c) const;

  GaussianMatrix& operator+=(const GaussianMatrix& o);
  GaussianMatrix& operator-=(const GaussianMatrix& o);
  GaussianMatrix& operator*=(const GaussianRational& s);
  friend GaussianMatrix operator+(GaussianMatrix a, const GaussianMatrix& b) { return a += b; }
  friend GaussianMatrix operator-(GaussianMatrix a, const GaussianMatrix& b) { return a -= b; }
  friend GaussianMatrix operator*(GaussianMatrix a, const GaussianRational& s) { return a *= s; }
  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

  bool is_zero() const noexcept;
  GaussianRational trace() const;
  GaussianMatrix pow(unsigned k) const;
  GaussianMatrix transpose() const;
  std::size_t rank() const;
  GaussianMatrix inverse() const;  // throws DimensionMismatch when singular or not square
  // Columns form a basis of the kernel.
  GaussianMatrix nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(GaussianMatrix& m);

// Univariate polynomial over Q(i), coefficients in increasing degree, no
// trailing zeros (the zero polynomial is empty).
using GaussianPoly = std::vector<GaussianRational>;

void trim(GaussianPoly& p);
int poly_degree(const GaussianPoly& p);  // -1 for zero
GaussianRational evaluate(const GaussianPoly& p, const GaussianRational& x);
GaussianPoly derivative(const GaussianPoly& p);
// Quotient and remainder; throws ZeroScalar on division by zero.
std::pair<GaussianPoly, GaussianPoly> divide(const GaussianPoly& num, const GaussianPoly& den);
GaussianPoly monic_gcd(GaussianPoly a, GaussianPoly b);

// det(x I - M) via Faddeev-LeVerrier.
GaussianPoly characteristic_polynomial(const GaussianMatrix& m);

// All roots of p in Q(i) with multiplicity, each root listed once, sorted.
// Throws SpectrumNotSplit when they do not account for deg p.
std::vector<std::pair<GaussianRational, int>> gaussian_roots(const GaussianPoly& p);

}  // namespace douady
