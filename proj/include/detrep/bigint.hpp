#pragma once

#include <gmpxx.h>

#include <string>

namespace detrep {

using Int = mpz_class;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// remainder in [0, |m|); m must be nonzero
inline Int floor_mod(const Int& a, const Int& m) {
  Int mm = int_abs(m);
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

}  // namespace detrep
