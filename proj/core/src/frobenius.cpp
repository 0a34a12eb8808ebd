#include "partineq/frobenius.hpp"

namespace partineq {

namespace {

void require_coeffs(const Int& a, const Int& b, const char* what) {
  if (a < 1 || b < 1)
    raise(Errc::Domain, std::string(what) + ": coefficients must be positive");
}

// Smallest x0 in [0, b/g) with a*x0 == n (mod b), assuming g = gcd(a,b)
// divides n. Solved with a modular inverse rather than a search.
Int minimal_residue(const Int& a, const Int& b, const Int& n, const Int& g) {
  Int bg = b / g;
  if (bg == 1) return 0;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), Int(a / g).get_mpz_t(), bg.get_mpz_t()) == 0)
    raise(Errc::Internal, "minimal_residue: inverse must exist after dividing by gcd");
  Int x0 = (inv * ((n / g) % bg)) % bg;
  if (x0 < 0) x0 += bg;
  return x0;
}

}  // namespace

Int frobenius_number(const Int& a, const Int& b) {
  if (a < 2 || b < 2)
    raise(Errc::Domain, "frobenius_number: arguments must be at least 2");
  if (gcd(a, b) != 1)
    raise(Errc::Domain, "frobenius_number: arguments must be coprime");
  return a * b - a - b;
}

LinearSolution solve_sylvester(const Int& a, const Int& b, const Int& n) {
  require_coeffs(a, b, "solve_sylvester");
  if (n < 0) raise(Errc::NoSolution, "solve_sylvester: negative target");
  Int g = gcd(a, b);
  if (n % g != 0)
    raise(Errc::NoSolution, "solve_sylvester: gcd(a,b) does not divide n");
  Int x = minimal_residue(a, b, n, g);
  if (a * x > n)
    raise(Errc::NoSolution, "solve_sylvester: no nonnegative representation");
  return {x, (n - a * x) / b};
}

LinearSolution solve_refined(const Int& a, const Int& b, const Int& n, const Int& h) {
  require_coeffs(a, b, "solve_refined");
  if (h < 0) raise(Errc::Domain, "solve_refined: window index must be nonnegative");
  Int g = gcd(a, b);
  if (n % g != 0 || n < 0)
    raise(Errc::Domain, "solve_refined: gcd(a,b) must divide the nonnegative target");
  // Shift the window to [0, b): x = x0 + b*h turns a*x + b*y = n into
  // a*x0 + b*y = n - a*b*h with x0 in [0, b).
  Int rest = n - a * b * h;
  if (rest < 0)
    raise(Errc::NoSolution, "solve_refined: window exceeds the target");
  Int x0 = minimal_residue(a, b, rest, g);
  if (a * x0 > rest)
    raise(Errc::NoSolution, "solve_refined: no solution in the window");
  return {x0 + b * h, (rest - a * x0) / b};
}

}  // namespace partineq
