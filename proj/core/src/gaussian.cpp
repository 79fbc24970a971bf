#include "douady/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "douady/error.hpp"

namespace douady {

// ---------------------------------------------------------------- scalars

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm_sq();
  if (n == 0) throw Error(ErrorCode::ZeroScalar, "inverse of zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational r(1);
  GaussianRational b = *this;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-')) {
      throw Error(ErrorCode::ParseError, "bad scalar '" + std::string(whole) + "'");
    }
  }
  Rational r;
  if (r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "bad scalar '" + std::string(whole) + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (text.back() != 'i') return {parse_rational(text, text), 0};
  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  Rational im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part, text);
  }
  Rational re = real_part.empty() ? Rational(0) : parse_rational(real_part, text);
  return {re, im};
}

std::string GaussianRational::str() const {
  if (im_ == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (re_ == 0) return imag;
  return re_.get_str() + (im_ > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

// ---------------------------------------------------------------- matrices

GaussianMatrix::GaussianMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

GaussianMatrix GaussianMatrix::identity(std::size_t n) {
  GaussianMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GaussianMatrix GaussianMatrix::diagonal(const std::vector<GaussianRational>& d) {
  GaussianMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

GaussianMatrix GaussianMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  GaussianMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

GaussianMatrix GaussianMatrix::column(const std::vector<GaussianRational>& v) {
  GaussianMatrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

std::vector<GaussianRational> GaussianMatrix::column_vector(std::size_t c) const {
  std::vector<GaussianRational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

GaussianMatrix& GaussianMatrix::operator+=(const GaussianMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

GaussianMatrix& GaussianMatrix::operator-=(const GaussianMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

GaussianMatrix& GaussianMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  GaussianMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

bool GaussianMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const auto& z) { return z.is_zero(); });
}

GaussianRational GaussianMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

GaussianMatrix GaussianMatrix::pow(unsigned k) const {
  if (!square()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  GaussianMatrix r = identity(rows_);
  GaussianMatrix b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

GaussianMatrix GaussianMatrix::transpose() const {
  GaussianMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::size_t> row_reduce(GaussianMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const GaussianRational inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      const GaussianRational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t GaussianMatrix::rank() const {
  GaussianMatrix copy = *this;
  return row_reduce(copy).size();
}

GaussianMatrix GaussianMatrix::inverse() const {
  if (!square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  GaussianMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
    throw Error(ErrorCode::DimensionMismatch, "singular matrix");
  }
  GaussianMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

GaussianMatrix GaussianMatrix::nullspace() const {
  GaussianMatrix red = *this;
  const auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  GaussianMatrix basis(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -red(r, f);
  }
  return basis;
}

// ---------------------------------------------------------------- polynomials

void trim(GaussianPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const GaussianPoly& p) { return static_cast<int>(p.size()) - 1; }

GaussianRational evaluate(const GaussianPoly& p, const GaussianRational& x) {
  GaussianRational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GaussianPoly derivative(const GaussianPoly& p) {
  GaussianPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussianRational(static_cast<long>(k)));
  trim(d);
  return d;
}

std::pair<GaussianPoly, GaussianPoly> divide(const GaussianPoly& num, const GaussianPoly& den) {
  if (den.empty()) throw Error(ErrorCode::ZeroScalar, "polynomial division by zero");
  GaussianPoly rem = num;
  trim(rem);
  const int dd = poly_degree(den);
  GaussianPoly quot(rem.size() > den.size() - 1 ? rem.size() - den.size() + 1 : 0);
  const GaussianRational lead_inv = den.back().inverse();
  while (poly_degree(rem) >= dd) {
    const int shift = poly_degree(rem) - dd;
    const GaussianRational f = rem.back() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(shift + k)] -= f * den[static_cast<std::size_t>(k)];
    rem.pop_back();  // leading term cancels exactly
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

GaussianPoly monic_gcd(GaussianPoly a, GaussianPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const GaussianRational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

GaussianPoly characteristic_polynomial(const GaussianMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  GaussianPoly c(n + 1);
  c[n] = 1;
  GaussianMatrix mk(n, n);  // M_0 = 0
  const GaussianMatrix id = GaussianMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / GaussianRational(static_cast<long>(k));
  }
  return c;
}

namespace {

// Exact Gaussian integer a + b i.
struct GInt {
  Integer re;
  Integer im;
  Integer norm() const { return re * re + im * im; }
  friend GInt operator*(const GInt& x, const GInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
};

// x / y when y divides x in Z[i].
bool exact_divide(const GInt& x, const GInt& y, GInt& out) {
  const Integer n = y.norm();
  // x * conj(y)
  Integer re = x.re * y.re + x.im * y.im;
  Integer im = x.im * y.re - x.re * y.im;
  if (re % n != 0 || im % n != 0) return false;
  out = {re / n, im / n};
  return true;
}

// Rational prime factors of n (distinct). Returns false if a composite
// cofactor could not be split by trial division.
bool rational_prime_factors(Integer n, std::vector<Integer>& primes) {
  constexpr unsigned long kTrialLimit = 2000000;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return false;
  primes.push_back(n);
  return true;
}

// Gaussian primes above the rational prime p (one per associate class).
std::vector<GInt> gaussian_primes_over(const Integer& p) {
  if (p == 2) return {{1, 1}};
  if (p % 4 == 3) return {{p, 0}};
  Integer a = 1;
  while (true) {
    Integer rest = p - a * a;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer b = sqrt(rest);
      return {{a, b}, {a, -b}};
    }
    ++a;
  }
}

// Roots in Z[i] of a monic polynomial with Gaussian integer coefficients and
// nonzero constant term: every root divides the constant term.
std::vector<GInt> gaussian_integer_roots(const std::vector<GInt>& poly) {
  const GInt& c0 = poly.front();
  std::vector<Integer> rational_primes;
  if (!rational_prime_factors(c0.norm(), rational_primes)) {
    throw Error(ErrorCode::SpectrumNotSplit, "constant term norm could not be factored");
  }
  std::vector<std::pair<GInt, int>> factorization;
  for (const auto& p : rational_primes) {
    for (const auto& pi : gaussian_primes_over(p)) {
      GInt rest = c0;
      int e = 0;
      GInt q;
      while (exact_divide(rest, pi, q)) {
        rest = q;
        ++e;
      }
      if (e > 0) factorization.emplace_back(pi, e);
    }
  }
  std::vector<GInt> divisors{{1, 0}};
  for (const auto& [pi, e] : factorization) {
    std::vector<GInt> next;
    for (const auto& d : divisors) {
      GInt pw = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(pw);
        pw = pw * pi;
      }
    }
    divisors = std::move(next);
  }
  const GInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<GInt> roots;
  for (const auto& d : divisors) {
    for (const auto& u : units) {
      GInt y = d * u;
      GInt acc{0, 0};
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * y;
        acc.re += it->re;
        acc.im += it->im;
      }
      if (acc.re == 0 && acc.im == 0) {
        const bool seen = std::any_of(roots.begin(), roots.end(),
                                      [&](const GInt& r) { return r.re == y.re && r.im == y.im; });
        if (!seen) roots.push_back(y);
      }
    }
  }
  return roots;
}

// Distinct roots of a squarefree monic polynomial with q(0) != 0.
std::vector<GaussianRational> distinct_roots(const GaussianPoly& q) {
  Integer denom = 1;
  for (const auto& c : q) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.im().get_den_mpz_t());
  }
  // Q(y) = D^d q(y / D) has Gaussian integer coefficients q_k D^{d-k}.
  const std::size_t d = q.size() - 1;
  std::vector<GInt> scaled(q.size());
  Integer pw = 1;
  for (std::size_t k = d + 1; k-- > 0;) {
    const Rational re = q[k].re() * pw;
    const Rational im = q[k].im() * pw;
    scaled[k] = {re.get_num(), im.get_num()};
    pw *= denom;
  }
  std::vector<GaussianRational> out;
  for (const auto& y : gaussian_integer_roots(scaled)) {
    Rational re(y.re, denom);
    Rational im(y.im, denom);
    re.canonicalize();
    im.canonicalize();
    out.emplace_back(re, im);
  }
  return out;
}

}  // namespace

std::vector<std::pair<GaussianRational, int>> gaussian_roots(const GaussianPoly& input) {
  GaussianPoly p = input;
  trim(p);
  if (p.empty()) throw Error(ErrorCode::SpectrumNotSplit, "zero polynomial");
  const int degree = poly_degree(p);
  std::vector<std::pair<GaussianRational, int>> roots;

  int zero_mult = 0;
  while (!p.empty() && p.front().is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(GaussianRational(0), zero_mult);

  if (poly_degree(p) > 0) {
    GaussianPoly squarefree = divide(p, monic_gcd(p, derivative(p))).first;
    const GaussianRational lead_inv = squarefree.back().inverse();
    for (auto& c : squarefree) c *= lead_inv;
    for (const auto& r : distinct_roots(squarefree)) {
      const GaussianPoly linear{-r, GaussianRational(1)};
      int mult = 0;
      while (true) {
        auto [quot, rem] = divide(p, linear);
        if (!rem.empty()) break;
        p = std::move(quot);
        ++mult;
      }
      roots.emplace_back(r, mult);
    }
  }

  int found = 0;
  for (const auto& [r, m] : roots) found += m;
  if (found != degree) {
    throw Error(ErrorCode::SpectrumNotSplit, "only " + std::to_string(found) + " of " +
                                                 std::to_string(degree) + " roots lie in Q(i)");
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace douady
