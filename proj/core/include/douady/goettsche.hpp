#pragma once

#include <vector>

#include "douady/partitions.hpp"
#include "douady/poly.hpp"
#include "douady/series.hpp"
#include "douady/surface.hpp"

namespace douady {

// Factor families of the Hilbert-scheme product
//   prod_m (1+t^{2m-1}q^m)^{b1} (1+t^{2m+1}q^m)^{b3}
//          / ((1-t^{2m-2}q^m)^{b0} (1-t^{2m}q^m)^{b2} (1-t^{2m+2}q^m)^{b4}).
std::vector<FactorFamily> goettsche_families(const SurfaceModel& s);

// Same product refined by Hodge type: a class of type (p,q) in mode m
// contributes x^{p+m-1} y^{q+m-1}. Throws MissingHodgeData.
std::vector<FactorFamily> goettsche_hodge_families(const SurfaceModel& s);

QTSeries poincare_hilbert_product(const SurfaceModel& s, int order);
QTSeries hodge_hilbert_product(const SurfaceModel& s, int order);

// Poincare polynomial of the m-th symmetric product: graded dimension of the
// m-th super-symmetric power of H^*(X) (odd classes used at most once).
CoeffPoly poincare_sym(const SurfaceModel& s, int m);
// poincare_sym for m = 0..max_m in one pass.
std::vector<CoeffPoly> poincare_sym_table(const SurfaceModel& s, int max_m);
// Independent route: q^m coefficient of prod_d (1 + t^d q)^{b_d} (d odd)
// times (1 - t^d q)^{-b_d} (d even), expanded through the series module.
CoeffPoly poincare_sym_product(const SurfaceModel& s, int m);
// Bigraded super-symmetric power in x, y; parity of (p,q) is p+q mod 2.
CoeffPoly hodge_sym(const SurfaceModel& s, int m);

// prod_i poincare_sym(s, a_i) over the a-vector of `a`.
CoeffPoly poincare_stratum_space(const SurfaceModel& s, const Partition& a);

// sum_{a in P(n)} t^{2(n - len a)} poincare_stratum_space(s, a).
CoeffPoly decomposition_poincare(const SurfaceModel& s, int n);

// Poincare polynomial of the punctual Hilbert scheme: sum_{nu in P(n)} t^{2n - 2 len(nu)}.
CoeffPoly poincare_punctual(int n);

struct PunctualTopBetti {
  Rational top_coefficient;  // coefficient of t^{2(n-1)}
  bool vanishes_above = false;
};
PunctualTopBetti punctual_top_betti(int n);

// Coefficient of q^n in prod_m (1 - q^m)^{-e}.
Integer euler_hilbert(long e, int n);
// sum_{a in P(n)} prod_i C(e + a_i - 1, a_i).
Integer orbifold_euler(long e, int n);

// sum_{a in P(n)} (xy)^{n - len a} prod_i hodge_sym(s, a_i). Throws MissingHodgeData.
CoeffPoly hodge_hilbert(const SurfaceModel& s, int n);

// sum_{a in P(n)} prod_i dim H^*(X^(a_i)).
Integer dim_equivariant_k(const SurfaceModel& s, int n);

}  // namespace douady
