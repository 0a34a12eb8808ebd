#include "doctest.h"

#include "partineq/counting.hpp"
#include "partineq/qseries.hpp"

#include <string>
#include <vector>

using namespace partineq;

TEST_CASE("series primitives") {
  const Series one = Series::one(4);
  CHECK(one[0] == 1);
  CHECK(one.nonzero_count() == 1);

  // 1/(1-q^2) truncated: 1 + q^2 + q^4
  const Series g = inv_pochhammer(2, 1, 5);
  CHECK(g[0] == 1);
  CHECK(g[1] == 0);
  CHECK(g[2] == 1);
  CHECK(g[4] == 1);
  CHECK(g[5] == 0);

  // (q^2; q)_2 inverse = 1/((1-q^2)(1-q^3)): partitions into parts {2,3}
  const Series pq = inv_pochhammer(2, 2, 10);
  CHECK(pq[5] == 1);
  CHECK(pq[6] == 2);  // 2+2+2 and 3+3
  CHECK(pq[7] == 1);

  // frequencies of part 2 restricted to squares: exponents 0, 2, 8, 18
  const Series pf = power_freq_series(2, 2, 20);
  for (std::size_t n = 0; n <= 20; ++n)
    CHECK(pf[n] == ((n == 0 || n == 2 || n == 8 || n == 18) ? 1 : 0));

  const Series prod = mul(g, g);
  CHECK(prod[2] == 2);
  CHECK(prod[4] == 3);  // q^0*q^4, q^2*q^2, q^4*q^0
  const Series diff = sub(prod, prod);
  CHECK(diff.nonzero_count() == 0);
}

TEST_CASE("first window series tracks the count difference") {
  const long L = 3, s = 1;
  const std::vector<long> V{2, 3};
  const Series h = h_series(L, s, V, 60);
  CHECK(h[0] == 0);
  const CountTable ci = count_series({L, s, V, ClassKind::I}, 60);
  const CountTable cd = count_series({L, s, {}, ClassKind::D}, 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(h[n] == ci.counts[n] - cd.counts[n]);
}

TEST_CASE("second window series tracks the marked count difference") {
  const long L = 4, s = 2;
  const std::vector<long> V{3, 5};
  const Series hp = hprime_series(L, s, V, 60);
  CHECK(hp[0] == -1);
  const CountTable ci = count_series({L, s, V, ClassKind::I}, 60);
  const CountTable cdv = count_series({L, s, V, ClassKind::DV}, 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(hp[n] == ci.counts[n] - cdv.counts[n]);
}

TEST_CASE("third window series tracks the colored count difference") {
  const long L = 4, s = 1;
  const std::vector<long> V{3, 4};
  const Series hpp = hdoubleprime_series(L, s, V, 60);
  const CountTable cs = count_series({L, s, {}, ClassKind::S}, 60);
  const CountTable cp = count_series({L, s, V, ClassKind::P}, 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(hpp[n] == cs.counts[n] - cp.counts[n]);
}

TEST_CASE("product ties the second and third series together") {
  const long L = 5, s = 1;
  const std::vector<long> V{3, 6};
  const Series hp = hprime_series(L, s, V, 80);
  Series rhs = hdoubleprime_series(L, s, V, 80);
  for (long k : V) {
    Series factor(80);
    factor[0] = 1;
    factor[static_cast<std::size_t>(k)] = -1;
    rhs = mul(rhs, factor);
  }
  CHECK(hp == rhs);
}

TEST_CASE("sign scanning") {
  const Series zero(10);
  const SignReport zr = sign_scan(zero);
  CHECK_FALSE(zr.last_negative.has_value());
  CHECK_FALSE(zr.last_positive.has_value());
  CHECK(zr.terminal_sign == '0');

  Series ones(5);
  for (std::size_t n = 0; n <= 5; ++n) ones[n] = 1;
  const SignReport or_ = sign_scan(ones);
  CHECK_FALSE(or_.last_negative.has_value());
  CHECK(or_.last_positive == 5);
  CHECK(or_.terminal_sign == '+');
  CHECK(or_.terminal_start == 0);

  const SignReport hr = sign_scan(h_series(3, 1, {2, 3}, 40));
  CHECK(hr.last_negative == 40);
  CHECK(hr.last_positive == 5);
  CHECK(hr.terminal_sign == '-');
  CHECK(hr.terminal_start == 6);
}

TEST_CASE("series exports") {
  Series f(2);
  f[1] = 1;
  f[2] = -3;
  CHECK(to_csv(f) == "n,coeff\n0,0\n1,1\n2,-3\n");
  const std::string j = to_json(sign_scan(f));
  CHECK(j.find("\"last_negative\":2") != std::string::npos);
  CHECK(j.find("\"terminal_sign\":\"-\"") != std::string::npos);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(h_series(3, 1, {5}, 10), Error);    // marked part above window
  CHECK_THROWS_AS(h_series(0, 1, {}, 10), Error);
  CHECK_THROWS_AS(hprime_series(3, 1, {3, 2}, 10), Error);  // not ascending
}
