#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "douady/gaussian.hpp"
#include "douady/partitions.hpp"

namespace douady {

// A commuting-matrix datum (A, B, v) of size n over Q(i).
struct MatrixTriple {
  GaussianMatrix a;
  GaussianMatrix b;
  std::vector<GaussianRational> v;

  std::size_t size() const noexcept { return v.size(); }
  // Throws DimensionMismatch when A, B are not n x n for n = len(v).
  void validate() const;
  friend bool operator==(const MatrixTriple&, const MatrixTriple&) = default;
};

// Point of the symmetric product: joint eigenvalue pairs with multiplicity.
struct SupportPoint {
  GaussianRational x;
  GaussianRational y;
  int multiplicity = 0;
  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

// Sorted by (x, y); multiplicities sum to n.
using SupportCycle = std::vector<SupportPoint>;

std::string to_string(const SupportCycle& cycle);  // "2*(0,0) + (1,3)"

bool is_commuting(const MatrixTriple& tr);

// span{A^k B^l v} = C^n. Throws NotCommuting.
bool is_stable(const MatrixTriple& tr);

// Tr(A^k B^l).
GaussianRational invariant(const MatrixTriple& tr, unsigned k, unsigned l);

// Joint spectrum with multiplicities via generalized eigenspaces of A and the
// spectrum of B restricted to each. Throws NotCommuting, SpectrumNotSplit.
SupportCycle barlet_support(const MatrixTriple& tr);

// Every support point has |x|^2 < 1 and |y|^2 < 1.
bool in_bidisk(const MatrixTriple& tr);

// Lower bound phi_lo <= sqrt(r) with sqrt(r) - phi_lo <= precision; exact
// when r is the square of a rational.
Rational sqrt_lower_bound(const Rational& r, const Rational& precision);

struct Retraction {
  MatrixTriple triple;
  Rational phi;     // max eigenvalue modulus, or a lower bound within precision
  bool exact = false;
  Rational scale;   // 1 / (1 - phi)
};

// Scales A and B by 1/(1 - phi), phi the largest eigenvalue modulus. When phi
// is irrational it is replaced by a lower bound within `precision`, so the
// scale never exceeds the true one. Throws NotInBidisk.
Retraction retract(const MatrixTriple& tr, const Rational& precision);

// (l1 A, l2 B, v). Throws ZeroScalar.
MatrixTriple torus_act(const GaussianRational& l1, const GaussianRational& l2,
                       const MatrixTriple& tr);

// G tr G^{-1}: (G A G^-1, G B G^-1, G v).
MatrixTriple conjugate(const MatrixTriple& tr, const GaussianMatrix& g);

// Cells (i, j) = x^i y^j of the staircase of mu: j < mu_{i+1}. Ordered by
// total degree, then by i.
std::vector<std::pair<int, int>> staircase(const Partition& mu);

// Multiplication by x and y on C[x,y] / I_mu in the staircase basis; v = 1.
MatrixTriple from_monomial_ideal(const Partition& mu);

// Torus weights lambda1^i lambda2^j on the staircase basis; conjugates
// from_monomial_ideal(mu) onto torus_act(lambda1, lambda2, .).
GaussianMatrix staircase_weights(const Partition& mu, const GaussianRational& l1,
                                 const GaussianRational& l2);

// The partition read off from which monomials A^i B^j v are nonzero; a
// conjugation invariant that recovers mu for monomial-ideal triples.
// Returns nullopt-like empty partition when v = 0.
Partition support_staircase(const MatrixTriple& tr);

}  // namespace douady
