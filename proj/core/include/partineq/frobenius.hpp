#pragma once

#include "partineq/bigint.hpp"

namespace partineq {

// Largest integer with no representation a*x + b*y (x, y >= 0);
// requires a, b >= 2 and gcd(a, b) = 1.
Int frobenius_number(const Int& a, const Int& b);

struct LinearSolution {
  Int x;
  Int y;
  bool operator==(const LinearSolution&) const = default;
};

// Nonnegative solution of a*x + b*y = n minimizing x (making it canonical);
// Errc::NoSolution when none exists.
LinearSolution solve_sylvester(const Int& a, const Int& b, const Int& n);

// Solution of a*x + b*y = n with y >= 0 and x constrained to the window
// b*h <= x < b*(h+1). The window contains at most gcd(a,b) admissible x
// values; the smallest is returned. Errors: Errc::Domain when gcd(a,b)
// does not divide n, Errc::NoSolution when the window holds no solution.
LinearSolution solve_refined(const Int& a, const Int& b, const Int& n, const Int& h);

}  // namespace partineq
