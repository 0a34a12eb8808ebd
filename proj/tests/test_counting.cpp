#include "doctest.h"

#include "partineq/counting.hpp"

#include <string>
#include <vector>

using namespace partineq;

namespace {

Partition make(std::initializer_list<std::pair<long, long>> pairs) {
  std::vector<std::pair<Int, Int>> v;
  for (const auto& [p, f] : pairs) v.emplace_back(p, f);
  return Partition::from_pairs(v);
}

}  // namespace

TEST_CASE("enumeration lists exactly the members") {
  const ClassParams i3{3, 1, {2, 3}, ClassKind::I};
  const std::vector<Partition> at5 = enumerate_class(i3, 5);
  REQUIRE(at5.size() == 2);
  CHECK(at5[0] == make({{1, 1}, {4, 1}}));
  CHECK(at5[1] == make({{1, 5}}));

  const ClassParams d3{3, 1, {}, ClassKind::D};
  const std::vector<Partition> dat5 = enumerate_class(d3, 5);
  REQUIRE(dat5.size() == 1);
  CHECK(dat5[0] == make({{2, 1}, {3, 1}}));
  CHECK(enumerate_class(d3, 1).empty());

  for (const Partition& p : enumerate_class(i3, 17)) {
    CHECK(p.weight() == 17);
    CHECK(is_member(p, i3));
    CHECK(p.freq(1) >= 1);
    CHECK(p.freq(2) == 0);
    CHECK(p.freq(3) == 0);
  }

  CHECK_THROWS_AS(enumerate_class(ClassParams{3, 1, {2}, ClassKind::P}, 5), Error);
}

TEST_CASE("series counts match the spot values") {
  const CountTable ti = count_series({3, 1, {2, 3}, ClassKind::I}, 12);
  CHECK(ti.counts[0] == 0);
  CHECK(ti.counts[5] == 2);

  const CountTable td = count_series({3, 1, {}, ClassKind::D}, 12);
  CHECK(td.counts[0] == 0);
  CHECK(td.counts[5] == 1);

  const CountTable tdv = count_series({4, 1, {2, 3}, ClassKind::DV}, 12);
  CHECK(tdv.counts[4] == 1);  // only {4}; a pair of 2s has non-square frequency

  // the two-colored class counts the empty member at weight zero
  const CountTable tp = count_series({3, 1, {2}, ClassKind::P}, 12);
  CHECK(tp.counts[0] == 1);
}

TEST_CASE("series counts match enumeration on a small grid") {
  const std::vector<ClassParams> grid = {
      {3, 1, {2, 3}, ClassKind::I},  {3, 1, {}, ClassKind::I},
      {3, 1, {}, ClassKind::D},      {3, 1, {}, ClassKind::S},
      {4, 1, {2, 5}, ClassKind::DV}, {4, 1, {3, 5}, ClassKind::E},
      {4, 2, {4, 6}, ClassKind::I},  {4, 2, {3}, ClassKind::DV},
  };
  for (const ClassParams& c : grid) {
    const CountTable table = count_series(c, 16);
    for (std::size_t n = 0; n <= 16; ++n)
      CHECK(table.counts[n] == enumerate_class(c, n).size());
  }
}

TEST_CASE("marked classes are subsets of the plain class") {
  const CountTable d = count_series({5, 1, {}, ClassKind::D}, 24);
  const CountTable dv = count_series({5, 1, {3, 4}, ClassKind::DV}, 24);
  const CountTable e = count_series({5, 1, {3, 4}, ClassKind::E}, 24);
  for (std::size_t n = 0; n <= 24; ++n) {
    CHECK(dv.counts[n] <= d.counts[n]);
    CHECK(e.counts[n] <= d.counts[n]);
  }
}

TEST_CASE("enumeration guard rejects oversized requests") {
  // ~5.6e8 members at this weight; the guard must fire, not the OOM killer
  CHECK_THROWS_AS(enumerate_class(ClassParams{5, 1, {}, ClassKind::S}, 5000), Error);
}

TEST_CASE("count comparison report") {
  const ClassParams a{3, 1, {2, 3}, ClassKind::I};
  const ClassParams b{3, 1, {}, ClassKind::D};
  const ScanReport r = inequality_scan(a, b, 40);
  CHECK(r.signs.size() == 41);
  CHECK(r.signs[5] == '+');  // 2 members vs 1
  CHECK(r.counts_a[5] == 2);
  CHECK(r.counts_b[5] == 1);

  const ScanReport same = inequality_scan(b, b, 20);
  for (char sign : same.signs) CHECK(sign == '0');
  CHECK_FALSE(same.last_positive.has_value());
  CHECK_FALSE(same.last_negative.has_value());
  CHECK(same.last_zero == 20);
}

TEST_CASE("table exports") {
  const CountTable t = count_series({3, 1, {}, ClassKind::D}, 3);
  CHECK(to_csv(t) == "n,count\n0,0\n1,0\n2,1\n3,1\n");
  const std::string j = to_json(t);
  CHECK(j.find("\"counts\"") != std::string::npos);
  CHECK(j.find("\"nmax\":3") != std::string::npos);

  const ScanReport r = inequality_scan({3, 1, {}, ClassKind::D}, {3, 1, {}, ClassKind::D}, 2);
  CHECK(to_csv(r) == "n,count_a,count_b,sign\n0,0,0,0\n1,0,0,0\n2,1,1,0\n");
}
