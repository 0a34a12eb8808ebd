#include "doctest.h"

#include "partineq/frobenius.hpp"

using namespace partineq;

TEST_CASE("largest non-representable value") {
  CHECK(frobenius_number(3, 5) == 7);
  CHECK(frobenius_number(2, 3) == 1);
  CHECK_THROWS_AS(frobenius_number(4, 6), Error);  // common factor 2
  CHECK_THROWS_AS(frobenius_number(1, 5), Error);
}

TEST_CASE("minimal-x solutions") {
  CHECK(solve_sylvester(3, 5, 8) == LinearSolution{1, 1});
  CHECK(solve_sylvester(2, 3, 76) == LinearSolution{2, 24});
  CHECK(solve_sylvester(2, 3, 68) == LinearSolution{1, 22});
  CHECK(solve_sylvester(3, 5, 5) == LinearSolution{0, 1});  // below the bound but solvable
  CHECK_THROWS_AS(solve_sylvester(3, 5, 7), Error);         // the Frobenius number itself
  CHECK_THROWS_AS(solve_sylvester(3, 5, 4), Error);

  // canonical choice: no solution with a smaller x exists
  for (long n = 12; n <= 120; ++n) {  // everything past the (3,7) Frobenius number 11
    const LinearSolution sol = solve_sylvester(3, 7, n);
    CHECK(Int(3) * sol.x + Int(7) * sol.y == n);
    CHECK(sol.y >= 0);
    for (Int x = 0; x < sol.x; ++x) CHECK((n - 3 * x) % 7 != 0);
  }
}

TEST_CASE("window-constrained solutions") {
  CHECK(solve_refined(2, 3, 28, 0) == LinearSolution{2, 8});
  CHECK(solve_refined(4, 6, 40, 1) == LinearSolution{7, 2});  // gcd 2 divides 40
  CHECK(solve_refined(2, 3, 2053, 1) == LinearSolution{5, 681});

  CHECK_THROWS_AS(solve_refined(4, 6, 41, 1), Error);  // gcd 2 does not divide 41
  CHECK_THROWS_AS(solve_refined(2, 3, 5, 1), Error);   // below (a-1)(b-1) + ab*h

  for (long h = 0; h <= 4; ++h)
    for (long off = 0; off <= 30; ++off) {
      const Int n = Int(2) * 4 + Int(15) * h + off;  // (a-1)(b-1) + abh + off
      const LinearSolution sol = solve_refined(3, 5, n, h);
      CHECK(Int(3) * sol.x + Int(5) * sol.y == n);
      CHECK(sol.x >= Int(5) * h);
      CHECK(sol.x < Int(5) * (h + 1));
      CHECK(sol.y >= 0);
    }
}

TEST_CASE("solver handles huge targets") {
  const Int n("39614081257132168796771975168");  // 2^95
  const LinearSolution sol = solve_sylvester(3, 5, n);
  CHECK(Int(3) * sol.x + Int(5) * sol.y == n);
  CHECK(sol.x >= 0);
  CHECK(sol.x < 5);  // minimal x is always below b when n is large

  const Int h("1000000000000");
  const LinearSolution ref = solve_refined(3, 5, n, h);
  CHECK(Int(3) * ref.x + Int(5) * ref.y == n);
  CHECK(ref.x >= Int(5) * h);
  CHECK(ref.x < Int(5) * (h + 1));
}
