#include "doctest.h"

#include "partineq/injections.hpp"

#include <string>
#include <utility>
#include <vector>

using namespace partineq;

namespace {

Partition make(std::initializer_list<std::pair<long, long>> pairs) {
  std::vector<std::pair<Int, Int>> v;
  for (const auto& [p, f] : pairs) v.emplace_back(p, f);
  return Partition::from_pairs(v);
}

MapTrace trace(std::string label,
               std::initializer_list<std::pair<const char*, long>> aux) {
  MapTrace t;
  t.case_label = std::move(label);
  for (const auto& [k, v] : aux) t.aux.emplace(k, v);
  return t;
}

}  // namespace

TEST_CASE("t1 worked examples") {
  const ClassParams c{3, 1, {2, 3}, ClassKind::I};

  SUBCASE("case 1a: enough s-parts to re-encode directly") {
    const Partition p = make({{1, 28}});
    const MapResult r = apply_t1(p, c);
    CHECK(r.image == make({{2, 2}, {3, 8}}));
    CHECK(r.trace == trace("1a", {{"alpha_f", 0}, {"d", 1}, {"f", 28},
                                  {"x", 2}, {"y", 8}}));
    CHECK(r.image.weight() == p.weight());
    CHECK(recover_t1(r.image, c) == r.trace);
  }

  SUBCASE("case 2a: bulk borrowed from a frequent part") {
    const Partition p = make({{1, 1}, {4, 513}});
    const MapResult r = apply_t1(p, c);
    CHECK(r.image == make({{2, 5}, {3, 681}}));
    CHECK(r.trace.case_label == "2a");
    CHECK(r.trace.aux.at("f") == 1);
    CHECK(r.trace.aux.at("i0") == 4);
    CHECK(r.trace.aux.at("sigma") == 2053);
    CHECK(r.trace.aux.at("x") == 5);
    CHECK(r.trace.aux.at("y") == 681);
    CHECK(r.image.weight() == p.weight());
    CHECK(recover_t1(r.image, c) == r.trace);
  }

  SUBCASE("case 1b: alignment marker part appears") {
    // d = gcd(6, 4) = 2, so the 1b band [k1, d*k1) is nonempty here.
    const ClassParams wide{6, 1, {4, 6}, ClassKind::I};
    const Partition p = make({{1, 217}});
    const MapResult r = apply_t1(p, wide);
    CHECK(r.image == make({{4, 8}, {5, 1}, {6, 30}}));
    CHECK(r.trace.case_label == "1b");
    CHECK(r.trace.aux.at("alpha_f") == 1);
    CHECK(r.trace.aux.at("d") == 2);
    CHECK(r.trace.aux.at("x") == 8);
    CHECK(r.trace.aux.at("y") == 30);
    CHECK(r.image.weight() == p.weight());
    CHECK(recover_t1(r.image, wide) == r.trace);
  }

  SUBCASE("images land in the plain window class") {
    const ClassParams d{3, 1, {}, ClassKind::D};
    for (long f : {28L, 100L, 2053L})
      CHECK(is_member(apply_t1(make({{1, f}}), c).image, d));
  }

  SUBCASE("rejections") {
    CHECK_THROWS_WITH_AS(apply_t1(make({{4, 7}}), c).image.weight(),
                         "partition is not in the domain class", Error);
    CHECK_THROWS_WITH_AS(recover_t1(make({{4, 1}}), c),
                         "case 1 requires f > k1^3", Error);
    try {
      recover_t1(make({{4, 1}}), c);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotInRange);
    }
  }
}

TEST_CASE("t1 image-side frequency intervals") {
  // Consecutive half-open bands, so disjointness reduces to hi == next lo.
  for (long k1 = 3; k1 <= 30; ++k1)
    for (long k2 = 2; k2 < k1; ++k2) {
      const ClassParams c{k1, 1, {k2, k1}, ClassKind::I};
      const T1Intervals iv = t1_intervals(c);
      CHECK(iv.k1 == k1);
      CHECK(iv.k2 == k2);
      CHECK(iv.lo("1a") == 0);
      CHECK(iv.hi("1a") == iv.lo("1b"));
      CHECK(iv.hi("1b") == iv.lo("2a"));
      CHECK(iv.hi("2a") == iv.lo("2b"));
      const Int k14 = Int(k1) * k1 * k1 * k1;
      CHECK(iv.hi("2b") == iv.d * k1 + 2 * k14);

      for (const char* label : {"1a", "1b", "2a", "2b"}) {
        if (iv.lo(label) == iv.hi(label)) continue;  // 1b is empty when d == 1
        CHECK(iv.case_of(iv.lo(label)) == label);
        CHECK(iv.case_of(iv.hi(label) - 1) == label);
      }
      CHECK_FALSE(iv.case_of(iv.hi("2b")).has_value());
    }
}

TEST_CASE("t3 worked examples, one per case") {
  // s = 1, t = 1: A = 12, B = 39, quartet at p0 = 1 is 196, 197, 389, 583.
  const ClassParams narrow{6, 1, {7}, ClassKind::DV};
  const ClassParams mid{30000, 1, {24336}, ClassKind::DV};
  const ClassParams wide{600000, 1, {24336}, ClassKind::DV};

  struct Example {
    const ClassParams& params;
    Partition domain, image;
    std::string label;
    std::vector<std::pair<const char*, long>> aux;
  };
  const std::vector<Example> cases = {
      {narrow, make({{7, 11}}), make({{1, 1}, {2, 2}, {3, 24}}), "1",
       {{"j", 0}, {"psi", 12}, {"u0", 0}, {"x", 2}, {"y", 24}}},
      {mid, make({{5, 312}, {24336, 1}}),
       make({{1, 1363}, {2, 1}, {3, 8177}}), "2a",
       {{"h0", 5}, {"psi", 2}, {"u0", 0}, {"x", 1}, {"y", 8177}}},
      {mid, make({{196, 1}, {389, 1}, {24336, 1}}),
       make({{1, 37}, {2, 1}, {3, 8294}}), "2b.i",
       {{"p0", 1}, {"psi", 2}, {"u0", 0}, {"x", 1}, {"y", 8294}}},
      {mid, make({{197, 1}, {583, 1}, {24336, 1}}),
       make({{1, 76}, {2, 1}, {3, 8346}}), "2b.ii",
       {{"p0", 1}, {"psi", 2}, {"u0", 0}, {"x", 1}, {"y", 8346}}},
      {mid, make({{24336, 1}, {30000, 1}}),
       make({{1, 115}, {196, 151}, {197, 125}}), "2b.iii.A",
       {{"l0", 30000}, {"p0", 1}, {"psi", 2}, {"x", 151}, {"y", 125}}},
      {mid, make({{197, 1}, {24336, 1}, {30000, 1}}),
       make({{1, 154}, {196, 211}, {197, 1}, {583, 22}}), "2b.iii.B",
       {{"l0", 30000}, {"p0", 1}, {"psi", 2}, {"x", 211}, {"y", 22}}},
      {wide, make({{196, 1}, {24336, 1}, {500000, 1}}),
       make({{1, 193}, {196, 1}, {197, 2398}, {389, 133}}), "2b.iii.C",
       {{"l0", 500000}, {"p0", 1}, {"psi", 2}, {"x", 133}, {"y", 2398}}},
      {wide, make({{196, 1}, {197, 1}, {24336, 1}, {500000, 1}}),
       make({{1, 232}, {196, 1}, {197, 1}, {389, 544}, {583, 536}}),
       "2b.iii.D",
       {{"l0", 500000}, {"p0", 1}, {"psi", 2}, {"x", 544}, {"y", 536}}}};

  for (const Example& ex : cases) {
    CAPTURE(ex.label);
    REQUIRE(is_member(ex.domain, ex.params));
    const MapResult r = apply_t3(ex.domain, ex.params);
    CHECK(r.image == ex.image);
    CHECK(r.trace.case_label == ex.label);
    for (const auto& [k, v] : ex.aux) CHECK(r.trace.aux.at(k) == v);
    CHECK(r.image.weight() == ex.domain.weight());

    ClassParams target = ex.params;
    target.kind = ClassKind::I;
    CHECK(is_member(r.image, target));
    CHECK(recover_t3(r.image, ex.params) == r.trace);
  }
}

TEST_CASE("t3 rejections") {
  CHECK_THROWS_WITH_AS(
      apply_t3(make({{4, 1}}), ClassParams{3, 1, {4}, ClassKind::DV})
          .image.weight(),
      "the t3 map needs L >= 2t+2", Error);
  const ClassParams mid{30000, 1, {24336}, ClassKind::DV};
  try {
    apply_t3(make({{30002, 1}}), mid);  // part just past the window top
    FAIL("expected a membership error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Membership);
  }
  CHECK_THROWS_WITH_AS(recover_t3(make({{1, 303}, {2, 1}, {3, 1}}), mid),
                       "s-frequency lies in no encoding region", Error);
}

TEST_CASE("s-frequency region classification") {
  // s = 1, t = 1: A = 12, B = 39.
  const auto cls = [](long sfreq) { return classify_s_frequency(1, 1, sfreq); };

  const auto r1 = cls(1);
  REQUIRE(r1.has_value());
  CHECK(r1->region == 1);
  CHECK(r1->case_label == "1");
  CHECK(r1->psi == 12);

  const auto r40 = cls(40);
  REQUIRE(r40.has_value());
  CHECK(r40->region == 1);
  CHECK(r40->psi == 39);

  const struct {
    long sfreq;
    int region;
    const char* label;
    long psi;
  } bands[] = {{37, 2, "2b.i", 2},      {76, 3, "2b.ii", 2},
               {116, 4, "2b.iii.A", 1}, {154, 5, "2b.iii.B", 2},
               {193, 6, "2b.iii.C", 2}, {232, 7, "2b.iii.D", 2}};
  for (const auto& b : bands) {
    CAPTURE(b.sfreq);
    const auto r = cls(b.sfreq);
    REQUIRE(r.has_value());
    CHECK(r->region == b.region);
    CHECK(r->case_label == b.label);
    CHECK(r->psi == b.psi);
  }

  const auto r2a = cls(541);  // 541 = 7*2*39 - 5
  REQUIRE(r2a.has_value());
  CHECK(r2a->region == 8);
  CHECK(r2a->case_label == "2a");
  CHECK(r2a->h0 == 2);
  CHECK(r2a->psi == 5);

  CHECK_FALSE(cls(303).has_value());  // complement 9 but block 8 is no band
  CHECK_FALSE(cls(39).has_value());   // rank zero is not a rank
}

TEST_CASE("no integer lies in two regions") {
  CHECK(region_overlap_count(1, 1, 100000) == 0);
  CHECK(region_overlap_first(1, 1, 20000) == 0);
  CHECK(region_overlap_count(2, 1, 1000000) == 0);
  CHECK(region_overlap_count(1, 2, 1000000) == 0);
}

TEST_CASE("alt map worked examples") {
  const ClassParams c{131, 1, {130, 131}, ClassKind::DV};

  const struct {
    Partition domain, image;
    long cns, gamma;
  } cases[] = {
      {make({{131, 1}}), make({{1, 63}, {2, 1}, {3, 22}}), 1, 1},
      {make({{130, 4}}), make({{1, 125}, {2, 1}, {3, 131}}), 2, 2},
      {make({{130, 1}, {131, 1}}), make({{1, 123}, {3, 46}}), 2, 3},
      {make({{130, 4}, {131, 9}}), make({{1, 827}, {2, 1}, {3, 290}}), 13, 3}};
  for (const auto& ex : cases) {
    CAPTURE(ex.gamma);
    REQUIRE(is_member(ex.domain, c));
    const MapResult r = apply_alt(ex.domain, c);
    CHECK(r.image == ex.image);
    CHECK(r.trace.case_label == "2");
    CHECK(r.trace.aux.at("cns") == ex.cns);
    CHECK(r.trace.aux.at("gamma") == ex.gamma);
    CHECK(r.image.weight() == ex.domain.weight());
    // s-frequency is odd and clears the floor 7 * 2^(t+1) + 1 = 57.
    const Int sfreq = r.image.freq(1);
    CHECK(sfreq % 2 == 1);
    CHECK(sfreq >= 57);
    CHECK(recover_alt(r.image, c) == r.trace);
  }

  CHECK_THROWS_WITH_AS(
      apply_alt(make({{5, 1}}), c).image.weight(),
      "alt map is out of scope when every marked part is absent", Error);
  CHECK_THROWS_WITH_AS(
      apply_alt(make({{131, 1}}), ClassParams{131, 1, {129, 131}, ClassKind::DV})
          .image.weight(),
      "smallest marked part is below the alt-map threshold", Error);
}

TEST_CASE("map id dispatch") {
  CHECK(map_id_from_string("t1") == MapId::T1);
  CHECK(map_id_from_string("t3") == MapId::T3);
  CHECK(map_id_from_string("alt") == MapId::Alt);
  CHECK(std::string(to_string(MapId::Alt)) == "alt");
  CHECK_THROWS_AS(map_id_from_string("t2"), Error);

  const ClassParams c{3, 1, {2, 3}, ClassKind::I};
  const Partition p = make({{1, 28}});
  const MapResult direct = apply_t1(p, c);
  const MapResult routed = apply_map(MapId::T1, p, c);
  CHECK(routed.image == direct.image);
  CHECK(routed.trace == direct.trace);
  CHECK(recover_map(MapId::T1, direct.image, c) == direct.trace);
}

TEST_CASE("whole-weight verification report") {
  const ClassParams c{3, 1, {2, 3}, ClassKind::I};

  const VerifyReport r60 = verify_injection(c, MapId::T1, 60);
  CHECK(r60.domain_size == 15);
  CHECK(r60.mapped == 9);
  CHECK(r60.bound_not_met == 6);
  CHECK(r60.failures == 0);
  CHECK(r60.collisions == 0);
  REQUIRE(r60.per_case.size() == 1);
  CHECK(r60.per_case.at("1a") == 9);
  REQUIRE(r60.notes.size() == 6);
  CHECK(r60.notes[0].find("no part with frequency at least") !=
        std::string::npos);

  const VerifyReport r2 = verify_injection(c, MapId::T1, 2);
  CHECK(r2.domain_size == 1);
  CHECK(r2.mapped == 0);
  CHECK(r2.bound_not_met == 1);
  CHECK(r2.per_case.empty());

  const std::string js = to_json(r60);
  CHECK(js.find("\"domain_size\":15") != std::string::npos);
  CHECK(js.find("\"map\":\"t1\"") != std::string::npos);
}

TEST_CASE("support lemmas") {
  using namespace lemmas;

  CHECK(comb_holds({1}));
  CHECK(comb_holds({3, 2}));
  CHECK(comb_holds({1, 1, 1, 1}));
  CHECK(comb_holds({10, 1, 7}));

  const ScanResult cs = comb_scan(3, 4);
  CHECK(cs.checked == 84);  // 4 + 16 + 64 tuples
  CHECK_FALSE(cs.first_violation.has_value());
  const ScanResult cs4 = comb_scan(4, 3);
  CHECK(cs4.checked == 3 + 9 + 27 + 81);
  CHECK_FALSE(cs4.first_violation.has_value());

  CHECK(crucial1_holds(1, 1, 2));
  CHECK(crucial1_holds(1, 2, 8));
  CHECK_FALSE(crucial1_holds(1, 2, 3));  // below the h >= 2st^2 hypothesis

  const ScanResult cr = crucial1_scan(2, 2);
  CHECK(cr.checked == 8);
  CHECK_FALSE(cr.first_violation.has_value());
}
