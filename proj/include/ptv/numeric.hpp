#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace ptv {

// All arithmetic in this library is exact: arbitrary-precision integers for
// matrices and polynomial coefficients, rationals only at the few spots where
// a division genuinely happens (normal forms, cross-ratios).
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (GMP's fdiv), used by the HNF reduction steps.
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divisible(const Int& a, const Int& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Fixed 62-bit prime used as the modular fast filter in front of exact rank
// certification.
inline constexpr unsigned long kFilterPrime = 4611686018427387847UL;

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace ptv
