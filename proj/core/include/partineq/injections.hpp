#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partineq/partition.hpp"

namespace partineq {

enum class MapId { T1, T3, Alt };

const char* to_string(MapId m);
MapId map_id_from_string(const std::string& s);

// Case label plus the named intermediate values that determine the image;
// recovery must reproduce the trace exactly.
struct MapTrace {
  std::string case_label;
  std::map<std::string, Int> aux;

  bool operator==(const MapTrace&) const = default;
};

struct MapResult {
  Partition image;
  MapTrace trace;
};

// Weight-preserving injection from the class with forced smallest part and
// excluded V (kind I, |V| >= 2) into the plain window class (kind D): the
// s-parts and auxiliary bulk are re-encoded as frequencies of the two
// largest V members. Cases: 1a/1b (many s-parts), 2a/2b (few s-parts,
// bulk borrowed from a frequent part i0).
MapResult apply_t1(const Partition& p, const ClassParams& c);
// Inverse on the image; Errc::NotInRange when the image is not attained.
MapTrace recover_t1(const Partition& image, const ClassParams& c);

// Weight-preserving injection from the power-frequency class (kind DV,
// requires L >= 2t+2) into kind I with the same window and V: the V-part
// frequency roots are rank-encoded into the frequency of a new smallest
// part s, with the balance carried by a V-free consecutive pair.
// Cases: 1, 2a, 2b.i, 2b.ii, 2b.iii.A-D.
MapResult apply_t3(const Partition& p, const ClassParams& c);
MapTrace recover_t3(const Partition& image, const ClassParams& c);

// Alternate encoding of the same domain, defined when the smallest V member
// is large (k_t * t! >= (2^(t+4) s + s^2) t^t); uses the support pattern
// plus a combinatorial rank instead of the full tuple rank. Single case "2";
// all-zero frequency tuples are out of scope (Errc::Unsupported).
MapResult apply_alt(const Partition& p, const ClassParams& c);
MapTrace recover_alt(const Partition& image, const ClassParams& c);

MapResult apply_map(MapId id, const Partition& p, const ClassParams& c);
MapTrace recover_map(MapId id, const Partition& image, const ClassParams& c);

// Image-side frequency intervals of the second-largest V member, one per
// case of the two-marked-parts map; consecutive and disjoint by construction:
//   1a: [0, k1)   1b: [k1, d k1)   2a: [d k1, d k1 + k1^4)
//   2b: [d k1 + k1^4, d k1 + 2 k1^4)
struct T1Intervals {
  Int k1, k2, d;
  // Half-open bounds per case label.
  Int lo(const std::string& case_label) const;
  Int hi(const std::string& case_label) const;
  std::optional<std::string> case_of(const Int& k2_freq) const;
};
T1Intervals t1_intervals(const ClassParams& c);

// Classification of an image's s-frequency into the eight encoding regions:
// region 1 covers case 1; regions 2..7 are the candidate bands for cases
// 2b.i, 2b.ii, 2b.iii.A-D; region 8 covers case 2a (with its part h0).
struct T2Class {
  std::string case_label;
  int region = 0;
  Int psi;
  Int h0;  // meaningful only for case 2a
};
std::optional<T2Class> classify_s_frequency(long s, long t, const Int& sfreq);

// Exhaustive check that no integer in [1, hi] lies in two regions; returns
// the number of violations (0 expected).
unsigned long region_overlap_count(long s, long t, unsigned long hi);
// Slow diagnostic: smallest multiply-claimed integer in [1, hi], or 0.
unsigned long region_overlap_first(long s, long t, unsigned long hi);

struct VerifyReport {
  MapId map = MapId::T1;
  ClassParams domain;
  Int n;
  std::size_t domain_size = 0;
  std::size_t mapped = 0;
  std::size_t bound_not_met = 0;
  std::size_t failures = 0;
  std::size_t collisions = 0;
  std::map<std::string, std::size_t> per_case;
  std::vector<std::string> notes;  // capped per-element diagnostics
};

// Applies the map to every domain member of weight n, checking weight
// conservation, image membership, image-side region membership, pairwise
// distinctness, and trace recovery.
VerifyReport verify_injection(const ClassParams& domain, MapId map, const Int& n);

std::string to_json(const MapTrace& trace);
std::string to_json(const VerifyReport& report);

namespace lemmas {

// t^t * sum m_i^t >= t! * sum_j C(m_1+...+m_j, j) for positive tuples.
bool comb_holds(const std::vector<long>& m);

// (1+1/h)^t <= 1+1/(2s) in cross-multiplied integer form
// (h+1)^t * 2s <= (2s+1) * h^t; holds whenever h >= 2st^2.
bool crucial1_holds(long s, long t, const Int& h);

struct ScanResult {
  unsigned long checked = 0;
  std::optional<std::string> first_violation;
};

// All positive tuples with arity <= t_max and entries <= entry_max.
ScanResult comb_scan(long t_max, long entry_max);
// All (s, t) <= (s_max, t_max) at h = 2st^2 and h = 2st^2 + 7.
ScanResult crucial1_scan(long s_max, long t_max);

}  // namespace lemmas

}  // namespace partineq
