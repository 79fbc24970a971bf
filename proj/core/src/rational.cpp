#include "douady/rational.hpp"

namespace douady {

Integer binomial(const Integer& top, unsigned long k) {
  if (top >= 0) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
  }
  // C(-m, k) = (-1)^k C(m + k - 1, k) for m > 0.
  Integer m = -top;
  Integer r;
  Integer upper = m + static_cast<long>(k) - 1;
  mpz_bin_ui(r.get_mpz_t(), upper.get_mpz_t(), k);
  return (k % 2 == 0) ? r : Integer(-r);
}

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace douady
