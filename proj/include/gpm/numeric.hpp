#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gpm {

using Int = mpz_class;
using Rat = mpq_class;

// q^e for any integer e (q != 0 when e < 0).
inline Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? q : Rat(1) / q;
  unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
  Rat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), n);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), n);
  out.canonicalize();
  return out;
}

inline Int int_pow(const Int& b, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool divides(const Int& d, const Int& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Exact exponent j with b^j == value, if one exists (b > 1 rational).
// Searches j in [-limit, limit].
inline bool log_exact(const Rat& b, const Rat& value, long& j, long limit = 256) {
  if (value == 1) {
    j = 0;
    return true;
  }
  Rat p(1);
  for (long k = 1; k <= limit; ++k) {
    p *= b;
    if (p == value) {
      j = k;
      return true;
    }
    if (p > value && value > 1) return false;
  }
  p = 1;
  for (long k = 1; k <= limit; ++k) {
    p /= b;
    if (p == value) {
      j = -k;
      return true;
    }
    if (p < value && value < 1) return false;
  }
  return false;
}

inline long lcm_long(long a, long b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
  return g.get_si();
}

}  // namespace gpm
