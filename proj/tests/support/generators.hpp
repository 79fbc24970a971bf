#pragma once

// Hand-rolled random generators for property tests.

#include <random>
#include <utility>
#include <vector>

#include "douady/adhm.hpp"
#include "douady/gaussian.hpp"

namespace gen {

using douady::GaussianMatrix;
using douady::GaussianRational;

// (a/b) + (c/d) i with |a|, |c| <= spread and 1 <= b, d <= max_den.
GaussianRational scalar(std::mt19937_64& rng, int spread, int max_den = 3);

GaussianMatrix invertible(std::size_t n, std::mt19937_64& rng);

std::vector<GaussianRational> vector(std::size_t n, std::mt19937_64& rng);

struct SplitPair {
  douady::MatrixTriple triple;
  std::vector<std::pair<GaussianRational, GaussianRational>> points;  // joint eigenvalues
};

// (G diag(x) G^-1, G diag(y) G^-1, v) with some repeated eigenvalues.
SplitPair split_diagonalizable(std::size_t n, std::mt19937_64& rng);

// sum_i x_i^k y_i^l
GaussianRational power_sum(const std::vector<std::pair<GaussianRational, GaussianRational>>& pts, unsigned k,
                           unsigned l);

}  // namespace gen
