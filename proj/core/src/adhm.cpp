#include "douady/adhm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "douady/error.hpp"

namespace douady {

void MatrixTriple::validate() const {
  const std::size_t n = v.size();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "triple matrices must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
}

std::string to_string(const SupportCycle& cycle) {
  if (cycle.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) os << " + ";
    if (cycle[k].multiplicity != 1) os << cycle[k].multiplicity << '*';
    os << '(' << cycle[k].x << ',' << cycle[k].y << ')';
  }
  return os.str();
}

bool is_commuting(const MatrixTriple& tr) {
  tr.validate();
  return tr.a * tr.b == tr.b * tr.a;
}

namespace {

void require_commuting(const MatrixTriple& tr) {
  if (!is_commuting(tr)) throw Error(ErrorCode::NotCommuting, "[A,B] != 0");
}

GaussianMatrix apply_to(const GaussianMatrix& m, const GaussianMatrix& column) { return m * column; }

// Incrementally maintained echelon basis of a subspace of Q(i)^n.
class SpanBuilder {
 public:
  // Adds w if it is independent; returns whether it was added.
  bool add(std::vector<GaussianRational> w) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& f = w[pivots_[k]];
      if (f.is_zero()) continue;
      const GaussianRational factor = f;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= factor * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    const GaussianRational inv = w[p].inverse();
    for (auto& z : w) z *= inv;
    // keep existing rows reduced at the new pivot
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      const GaussianRational f = row[p];
      for (std::size_t j = 0; j < w.size(); ++j) row[j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }
  std::size_t dim() const noexcept { return rows_.size(); }

 private:
  std::vector<std::vector<GaussianRational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool is_stable(const MatrixTriple& tr) {
  require_commuting(tr);
  const std::size_t n = tr.size();
  SpanBuilder span;
  std::vector<GaussianMatrix> frontier;
  if (span.add(tr.v)) frontier.push_back(GaussianMatrix::column(tr.v));
  // Each round either grows the span or empties the frontier: at most n rounds.
  while (!frontier.empty() && span.dim() < n) {
    std::vector<GaussianMatrix> next;
    for (const auto& w : frontier) {
      for (const GaussianMatrix* m : {&tr.a, &tr.b}) {
        GaussianMatrix image = apply_to(*m, w);
        if (span.add(image.column_vector(0))) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return span.dim() == n;
}

GaussianRational invariant(const MatrixTriple& tr, unsigned k, unsigned l) {
  tr.validate();
  return (tr.a.pow(k) * tr.b.pow(l)).trace();
}

SupportCycle barlet_support(const MatrixTriple& tr) {
  require_commuting(tr);
  const std::size_t n = tr.size();
  SupportCycle cycle;
  if (n == 0) return cycle;
  const GaussianMatrix id = GaussianMatrix::identity(n);
  for (const auto& [x, mult] : gaussian_roots(characteristic_polynomial(tr.a))) {
    const GaussianMatrix kernel = (tr.a - id * x).pow(static_cast<unsigned>(n)).nullspace();
    if (kernel.cols() != static_cast<std::size_t>(mult)) {
      throw std::logic_error("generalized eigenspace dimension differs from multiplicity");
    }
    // B preserves the kernel: B K = K M, solved on k independent rows of K.
    GaussianMatrix kt = kernel.transpose();
    const auto rows = row_reduce(kt);
    const std::size_t k = kernel.cols();
    GaussianMatrix k_sub(k, k);
    GaussianMatrix bk = tr.b * kernel;
    GaussianMatrix bk_sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        k_sub(r, c) = kernel(rows[r], c);
        bk_sub(r, c) = bk(rows[r], c);
      }
    }
    const GaussianMatrix restricted = k_sub.inverse() * bk_sub;
    for (const auto& [y, ym] : gaussian_roots(characteristic_polynomial(restricted))) {
      cycle.push_back({x, y, ym});
    }
  }
  std::sort(cycle.begin(), cycle.end(), [](const SupportPoint& p, const SupportPoint& q) {
    if (!(p.x == q.x)) return p.x < q.x;
    return p.y < q.y;
  });

  // Power sums of the cycle must reproduce the trace invariants.
  for (unsigned total = 0; total <= n; ++total) {
    for (unsigned k = 0; k <= total; ++k) {
      const unsigned l = total - k;
      GaussianRational sum;
      for (const auto& p : cycle) sum += p.x.pow(k) * p.y.pow(l) * GaussianRational(p.multiplicity);
      if (!(sum == invariant(tr, k, l))) {
        throw std::logic_error("support cycle disagrees with Tr(A^k B^l)");
      }
    }
  }
  return cycle;
}

bool in_bidisk(const MatrixTriple& tr) {
  const auto cycle = barlet_support(tr);
  return std::all_of(cycle.begin(), cycle.end(), [](const SupportPoint& p) {
    return p.x.norm_sq() < 1 && p.y.norm_sq() < 1;
  });
}

Rational sqrt_lower_bound(const Rational& r, const Rational& precision) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative number");
  if (precision <= 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  const Integer num = r.get_num();
  const Integer den = r.get_den();
  const Integer prod = num * den;  // sqrt(r) = sqrt(num * den) / den
  if (mpz_perfect_square_p(prod.get_mpz_t())) {
    Rational exact(sqrt(prod), den);
    exact.canonicalize();
    return exact;
  }
  // floor(sqrt(prod * 4^k)) / (den * 2^k) is within 1 / (den * 2^k) below sqrt(r).
  Integer scale = 1;
  while (Rational(1) / Rational(den * scale) > precision) scale *= 2;
  Rational lo(sqrt(prod * scale * scale), den * scale);
  lo.canonicalize();
  return lo;
}

Retraction retract(const MatrixTriple& tr, const Rational& precision) {
  const auto cycle = barlet_support(tr);
  Rational max_norm_sq = 0;
  for (const auto& p : cycle) {
    if (!(p.x.norm_sq() < 1 && p.y.norm_sq() < 1)) {
      throw Error(ErrorCode::NotInBidisk, "eigenvalue of modulus >= 1");
    }
    max_norm_sq = std::max({max_norm_sq, p.x.norm_sq(), p.y.norm_sq()});
  }
  Retraction out;
  out.phi = sqrt_lower_bound(max_norm_sq, precision);
  out.exact = out.phi * out.phi == max_norm_sq;
  out.scale = Rational(1) / (Rational(1) - out.phi);
  const GaussianRational s(out.scale);
  out.triple = MatrixTriple{tr.a * s, tr.b * s, tr.v};
  return out;
}

MatrixTriple torus_act(const GaussianRational& l1, const GaussianRational& l2,
                       const MatrixTriple& tr) {
  if (l1.is_zero() || l2.is_zero()) throw Error(ErrorCode::ZeroScalar, "torus weights must be nonzero");
  tr.validate();
  return {tr.a * l1, tr.b * l2, tr.v};
}

MatrixTriple conjugate(const MatrixTriple& tr, const GaussianMatrix& g) {
  tr.validate();
  const GaussianMatrix g_inv = g.inverse();
  return {g * tr.a * g_inv, g * tr.b * g_inv, (g * GaussianMatrix::column(tr.v)).column_vector(0)};
}

std::vector<std::pair<int, int>> staircase(const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu.parts()[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
  }
  std::sort(cells.begin(), cells.end(), [](const auto& p, const auto& q) {
    if (p.first + p.second != q.first + q.second) return p.first + p.second < q.first + q.second;
    return p.first < q.first;
  });
  return cells;
}

MatrixTriple from_monomial_ideal(const Partition& mu) {
  const auto cells = staircase(mu);
  const std::size_t n = cells.size();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[cells[k]] = k;
  MatrixTriple tr{GaussianMatrix(n, n), GaussianMatrix(n, n), std::vector<GaussianRational>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto [i, j] = cells[k];
    if (auto it = index.find({i + 1, j}); it != index.end()) tr.a(it->second, k) = 1;
    if (auto it = index.find({i, j + 1}); it != index.end()) tr.b(it->second, k) = 1;
  }
  if (n > 0) tr.v[index.at({0, 0})] = 1;
  return tr;
}

GaussianMatrix staircase_weights(const Partition& mu, const GaussianRational& l1,
                                 const GaussianRational& l2) {
  std::vector<GaussianRational> diag;
  for (const auto& [i, j] : staircase(mu)) {
    diag.push_back(l1.pow(static_cast<unsigned>(i)) * l2.pow(static_cast<unsigned>(j)));
  }
  return GaussianMatrix::diagonal(diag);
}

Partition support_staircase(const MatrixTriple& tr) {
  require_commuting(tr);
  const std::size_t n = tr.size();
  std::vector<int> rows;
  GaussianMatrix ai_v = GaussianMatrix::column(tr.v);  // A^i v
  for (std::size_t i = 0; i <= n; ++i) {
    int length = 0;
    GaussianMatrix w = ai_v;
    while (!w.is_zero() && static_cast<std::size_t>(length) <= n) {
      ++length;
      w = tr.b * w;
    }
    if (length == 0) break;
    rows.push_back(length);
    ai_v = tr.a * ai_v;
  }
  return Partition::from_parts(rows);
}

}  // namespace douady
