#include "partineq/pairing.hpp"

namespace partineq {

namespace {

void require_positive(const Int& x, const char* what) {
  if (x < 1) raise(Errc::Domain, std::string(what) + ": entries must be positive");
}

void require_arity(std::size_t t) {
  if (t == 0) raise(Errc::Domain, "tuple arity must be positive");
}

}  // namespace

Int cantor_pair(const Int& m, const Int& n) {
  require_positive(m, "cantor_pair");
  require_positive(n, "cantor_pair");
  // Diagonal d = m + n - 1 holds the d values C(d,2)+1 .. C(d,2)+d.
  return binom(m + n - 1, 2) + m;
}

std::pair<Int, Int> cantor_unpair(const Int& v) {
  require_positive(v, "cantor_unpair");
  // Largest d with C(d, 2) < v; binary search on the doubling upper bound.
  Int lo = 1, hi = 2;
  while (binom(hi, 2) < v) hi *= 2;
  while (lo < hi) {  // smallest d with C(d, 2) >= v is hi; we want one less
    Int mid = (lo + hi) / 2;
    if (binom(mid, 2) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  Int d = lo - 1;
  Int m = v - binom(d, 2);
  Int n = d - m + 1;
  return {m, n};
}

Int spiral_pair(const Int& m, const Int& n) {
  require_positive(m, "spiral_pair");
  require_positive(n, "spiral_pair");
  // Shell h = max(m, n) holds (h-1)^2 + 1 .. h^2; odd offsets run down the
  // column m = h, even offsets along the row n = h.
  if (m >= n) return ipow(m - 1, 2) + 2 * n - 1;
  return ipow(n - 1, 2) + 2 * m;
}

std::pair<Int, Int> spiral_unpair(const Int& v) {
  require_positive(v, "spiral_unpair");
  Int h = root_floor(v - 1, 2) + 1;  // smallest h with h^2 >= v
  Int offset = v - ipow(h - 1, 2);   // in [1, 2h-1]
  if (offset % 2 == 1) return {h, (offset + 1) / 2};
  return {offset / 2, h};
}

Int cns_rank(const std::vector<Int>& m) {
  require_arity(m.size());
  Int rank = 0, prefix = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    require_positive(m[j], "cns_rank");
    prefix += m[j];
    rank += binom(prefix, static_cast<unsigned long>(j + 1));
  }
  return rank;
}

namespace {

// Largest c with C(c, j) <= r (r >= 0, j >= 1).
Int max_binomial_base(const Int& r, unsigned long j) {
  Int lo = 0, hi = 1;
  while (binom(hi, j) <= r) hi *= 2;
  // smallest c with C(c, j) > r is hi after the search; return hi - 1
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (binom(mid, j) <= r)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo - 1;
}

}  // namespace

std::optional<std::vector<Int>> cns_unrank(const Int& v, std::size_t t) {
  require_arity(t);
  if (v < 1) raise(Errc::Domain, "cns_unrank: v must be positive");
  // Greedy digits c_t > c_{t-1} > ... > c_1 with C(c_j, j) maximal at each step.
  std::vector<Int> prefix(t);
  Int r = v;
  for (std::size_t j = t; j >= 1; --j) {
    Int c = max_binomial_base(r, static_cast<unsigned long>(j));
    r -= binom(c, static_cast<unsigned long>(j));
    prefix[j - 1] = c;
  }
  if (r != 0) raise(Errc::Internal, "cns_unrank: greedy residue nonzero");
  if (prefix[0] < 1) return std::nullopt;  // tuple would have a nonpositive entry
  std::vector<Int> m(t);
  m[0] = prefix[0];
  for (std::size_t j = 1; j < t; ++j) m[j] = prefix[j] - prefix[j - 1];
  return m;
}

// The cube-shell order: shell h = max entry; within a shell, tuples sorted
// lexicographically ascending. Walking positions left to right, the count of
// shell-h tuples below a given one splits by whether the prefix so far
// already contains an h: if yes, each later position ranges over [1, h]
// freely (h^r continuations); if no, the current entry a < h contributes
// (a-1) * D_r and a = h contributes (h-1) * D_r, where D_r = h^r - (h-1)^r
// counts length-r suffixes that still must contain an h.
Int psi0_rank(const std::vector<Int>& m) {
  const std::size_t t = m.size();
  require_arity(t);
  Int h = 0;
  for (const Int& a : m) {
    require_positive(a, "psi0_rank");
    if (a > h) h = a;
  }
  Int idx = 0;
  bool seen_max = false;
  for (std::size_t i = 0; i < t; ++i) {
    const unsigned long r = static_cast<unsigned long>(t - 1 - i);
    if (seen_max) {
      idx += (m[i] - 1) * ipow(h, r);
    } else {
      Int d = ipow(h, r) - ipow(h - 1, r);
      if (m[i] < h) {
        idx += (m[i] - 1) * d;
      } else {
        idx += (h - 1) * d;
        seen_max = true;
      }
    }
  }
  return ipow(h - 1, static_cast<unsigned long>(t)) + idx + 1;
}

std::vector<Int> psi0_unrank(const Int& v, std::size_t t) {
  require_arity(t);
  if (v < 1) raise(Errc::Domain, "psi0_unrank: v must be positive");
  const unsigned long tu = static_cast<unsigned long>(t);
  Int h = root_floor(v - 1, tu) + 1;  // smallest h with h^t >= v
  Int idx = v - ipow(h - 1, tu) - 1;
  std::vector<Int> m(t);
  bool seen_max = false;
  for (std::size_t i = 0; i < t; ++i) {
    const unsigned long r = static_cast<unsigned long>(t - 1 - i);
    if (seen_max) {
      Int q = ipow(h, r);
      m[i] = idx / q + 1;
      idx %= q;
    } else {
      Int d = ipow(h, r) - ipow(h - 1, r);
      if (d > 0 && idx < (h - 1) * d) {
        m[i] = idx / d + 1;
        idx %= d;
      } else {
        m[i] = h;
        idx -= (h - 1) * d;
        seen_max = true;
      }
    }
  }
  if (idx != 0 || !seen_max)
    raise(Errc::Internal, "psi0_unrank: leftover index after decoding");
  return m;
}

Int psi_rank(const std::vector<Int>& m) {
  std::vector<Int> shifted;
  shifted.reserve(m.size());
  for (const Int& a : m) {
    if (a < 0) raise(Errc::Domain, "psi_rank: entries must be nonnegative");
    shifted.push_back(a + 1);
  }
  return psi0_rank(shifted);
}

std::vector<Int> psi_unrank(const Int& v, std::size_t t) {
  std::vector<Int> m = psi0_unrank(v, t);
  for (Int& a : m) a -= 1;
  return m;
}

}  // namespace partineq
