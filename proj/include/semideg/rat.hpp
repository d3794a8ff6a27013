#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "semideg/errors.hpp"

namespace semideg {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a,b) does not canonicalize; always build rationals through this.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InternalInvariant("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p())
    throw InternalInvariant("integer overflow converting to long");
  return z.get_si();
}

inline long to_long(const Rat& q) {
  if (!is_integer(q)) throw InternalInvariant("expected an integer value");
  return to_long(Int(q.get_num()));
}

// Canonical "num/den" form (den always printed, e.g. "3/2", "-5/1").
inline std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Compact form for human-readable output: "3/2" but plain "5" for integers.
inline std::string rat_str_short(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return rat_str(q);
}

} // namespace semideg
