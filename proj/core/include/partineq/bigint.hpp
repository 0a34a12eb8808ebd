#pragma once

#include <gmpxx.h>

#include <string>

#include "partineq/errors.hpp"

namespace partineq {

using Int = mpz_class;
using Rat = mpq_class;

// base^exp for exp >= 0.
inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

// Binomial coefficient C(n, k); zero when n < k.
inline Int binom(const Int& n, unsigned long k) {
  if (n < 0) raise(Errc::Domain, "binom: negative upper argument");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// floor(v^(1/t)) for v >= 0, t >= 1.
inline Int root_floor(const Int& v, unsigned long t) {
  if (v < 0 || t == 0) raise(Errc::Domain, "root_floor: bad arguments");
  Int r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), t);
  return r;
}

// If v is a perfect t-th power, stores the root and returns true.
inline bool perfect_root(const Int& v, unsigned long t, Int& root) {
  if (v < 0 || t == 0) raise(Errc::Domain, "perfect_root: bad arguments");
  int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), t);
  return exact != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Guarded narrowing for loop bounds and array indices.
inline unsigned long to_ulong(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    raise(Errc::Resource, std::string(what) + ": value does not fit in an unsigned long");
  return v.get_ui();
}

// Strict base-10 integer parse (optional leading '-').
inline Int parse_int(const std::string& s) {
  if (s.empty()) raise(Errc::Parse, "empty integer literal");
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) raise(Errc::Parse, "bare sign is not an integer");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      raise(Errc::Parse, "invalid integer literal: " + s);
  return Int(s, 10);
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace partineq
