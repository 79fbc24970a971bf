#pragma once

#include <gmpxx.h>

#include <string>

namespace douady {

using Integer = mpz_class;
using Rational = mpq_class;

// Generalized binomial coefficient C(top, k) for any integer top and k >= 0,
// i.e. top (top-1) ... (top-k+1) / k!.
Integer binomial(const Integer& top, unsigned long k);

// C(w + k - 1, k): multisets of size k drawn from w objects (w may be negative).
inline Integer multichoose(const Integer& w, unsigned long k) {
  return binomial(w + static_cast<long>(k) - 1, k);
}

Integer factorial(unsigned long k);

std::string to_string(const Rational& r);

// n/d in lowest terms; mpq_class(n, d) alone leaves the fraction as given.
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace douady
