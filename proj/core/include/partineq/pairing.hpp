#pragma once

#include <optional>
#include <vector>

#include "partineq/bigint.hpp"

namespace partineq {

// All codomains are 1-based: the pair maps are bijections onto {1, 2, ...}.

// Diagonal enumeration of positive pairs: (m, n) -> C(m+n-1, 2) + m.
Int cantor_pair(const Int& m, const Int& n);
std::pair<Int, Int> cantor_unpair(const Int& v);

// Square-shell enumeration of positive pairs:
// (m, n) -> (m-1)^2 + 2n - 1 when m >= n, else (n-1)^2 + 2m.
Int spiral_pair(const Int& m, const Int& n);
std::pair<Int, Int> spiral_unpair(const Int& v);

// Combinatorial number system rank of a strictly positive tuple:
// sum_j C(m_1 + ... + m_j, j). Injective on positive tuples of fixed
// arity but NOT on tuples with zero entries (e.g. the arity-2 formula
// value of (1,0) equals that of (0,2)), so zero entries are rejected.
Int cns_rank(const std::vector<Int>& m);
// Inverse on the image; nullopt when v is not the rank of any positive tuple.
std::optional<std::vector<Int>> cns_unrank(const Int& v, std::size_t t);

// Cube-shell bijection from positive tuples onto {1, 2, ...}: tuples are
// ordered by their maximum entry, ties broken lexicographically ascending.
// Satisfies (max-1)^t < rank <= max^t.
Int psi0_rank(const std::vector<Int>& m);
std::vector<Int> psi0_unrank(const Int& v, std::size_t t);

// Same bijection shifted to nonnegative tuples: rank(m) = psi0_rank(m + 1).
// Satisfies (max(m))^t < rank <= (max(m)+1)^t.
Int psi_rank(const std::vector<Int>& m);
std::vector<Int> psi_unrank(const Int& v, std::size_t t);

}  // namespace partineq
