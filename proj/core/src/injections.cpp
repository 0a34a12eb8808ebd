#include "partineq/injections.hpp"

#include <algorithm>
#include <set>

#include "json_io.hpp"
#include "partineq/bounds.hpp"
#include "partineq/counting.hpp"
#include "partineq/frobenius.hpp"
#include "partineq/pairing.hpp"

namespace partineq {

const char* to_string(MapId m) {
  switch (m) {
    case MapId::T1: return "t1";
    case MapId::T3: return "t3";
    case MapId::Alt: return "alt";
  }
  raise(Errc::Internal, "unknown map id");
}

MapId map_id_from_string(const std::string& s) {
  if (s == "t1") return MapId::T1;
  if (s == "t3") return MapId::T3;
  if (s == "alt") return MapId::Alt;
  raise(Errc::Parse, "unknown map id: " + s);
}

namespace {

// Re-raises solver failures as the map-level "prerequisites absent" error.
LinearSolution solve_or(Errc code, const Int& a, const Int& b, const Int& n,
                        const char* what) {
  if (n < 0) raise(code, std::string(what) + ": negative balance");
  try {
    return solve_sylvester(a, b, n);
  } catch (const Error& e) {
    if (e.code() == Errc::Internal) throw;
    raise(code, std::string(what) + ": " + e.what());
  }
}

LinearSolution solve_window_or(Errc code, const Int& a, const Int& b, const Int& n,
                               const Int& h, const char* what) {
  try {
    return solve_refined(a, b, n, h);
  } catch (const Error& e) {
    if (e.code() == Errc::Internal) throw;
    raise(code, std::string(what) + ": " + e.what());
  }
}

void check(bool ok, const char* what) {
  if (!ok) raise(Errc::Internal, what);
}

// Removes `amount` copies of a part from a candidate preimage; failure means
// the image cannot be attained.
void take_or_not_in_range(Partition& pre, const Int& part, const Int& amount) {
  if (amount == 0) return;
  if (pre.freq(part) < amount)
    raise(Errc::NotInRange, "image lacks " + amount.get_str() + " copies of part " +
                                part.get_str());
  pre.add(part, -amount);
}

}  // namespace

// ---------------------------------------------------------------------------
// Two-marked-parts map (t1)

T1Intervals t1_intervals(const ClassParams& c) {
  c.validate();
  if (c.t() < 2) raise(Errc::Domain, "t1 intervals need at least two marked parts");
  const auto vd = c.v_desc();
  T1Intervals iv;
  iv.k1 = vd[0];
  iv.k2 = vd[1];
  iv.d = gcd(iv.k1, iv.k2);
  return iv;
}

Int T1Intervals::lo(const std::string& case_label) const {
  if (case_label == "1a") return 0;
  if (case_label == "1b") return k1;
  if (case_label == "2a") return d * k1;
  if (case_label == "2b") return d * k1 + ipow(k1, 4);
  raise(Errc::Domain, "unknown t1 case label: " + case_label);
}

Int T1Intervals::hi(const std::string& case_label) const {
  if (case_label == "1a") return k1;
  if (case_label == "1b") return d * k1;
  if (case_label == "2a") return d * k1 + ipow(k1, 4);
  if (case_label == "2b") return d * k1 + 2 * ipow(k1, 4);
  raise(Errc::Domain, "unknown t1 case label: " + case_label);
}

std::optional<std::string> T1Intervals::case_of(const Int& k2_freq) const {
  for (const char* label : {"1a", "1b", "2a", "2b"})
    if (k2_freq >= lo(label) && k2_freq < hi(label)) return std::string(label);
  return std::nullopt;
}

namespace {

void require_t1_params(const ClassParams& c) {
  c.validate();
  if (c.kind != ClassKind::I)
    raise(Errc::Domain, "the t1 map takes kind-I parameters");
  if (c.t() < 2)
    raise(Errc::Domain, "the t1 map needs at least two marked parts");
}

ClassParams t1_target(const ClassParams& c) {
  return ClassParams{c.L, c.s, {}, ClassKind::D};
}

}  // namespace

MapResult apply_t1(const Partition& p, const ClassParams& c) {
  require_t1_params(c);
  if (!is_member(p, c))
    raise(Errc::Membership, "partition is not in the domain class");

  const auto vd = c.v_desc();
  const Int k1 = vd[0], k2 = vd[1];
  const Int d = gcd(k1, k2);
  const Int s = c.s;
  const Int f = p.freq(s);
  const Int k1_cubed = ipow(k1, 3);

  Partition image = p;
  image.set_freq(s, 0);
  MapTrace trace;
  trace.aux["f"] = f;
  trace.aux["d"] = d;
  LinearSolution sol;

  if (f > k1_cubed) {
    // Many s-parts: s*f is re-encoded directly on the pair (k2, k1).
    const Int alpha = (s * f) % d;
    trace.aux["alpha_f"] = alpha;
    if (alpha == 0) {
      trace.case_label = "1a";
      sol = solve_window_or(Errc::BoundNotMet, k2, k1, s * f, 0, "t1 case 1a");
    } else {
      // The residue alpha is parked as a single part k2 + alpha, and the
      // window index alpha makes the k2 frequency reveal alpha.
      trace.case_label = "1b";
      sol = solve_window_or(Errc::BoundNotMet, k2, k1, s * f - (k2 + alpha), alpha,
                            "t1 case 1b");
      image.add(k2 + alpha, 1);
    }
  } else {
    // Few s-parts: borrow 2 k1^5 + k1^3 copies of the first part frequent
    // enough to supply them; the k2 frequency encodes f via the window index.
    const Int q = 2 * ipow(k1, 5) + k1_cubed;
    Int i0 = 0;
    for (const auto& [part, pf] : p.parts()) {
      if (part == s) continue;
      if (pf >= q) {
        i0 = part;
        break;
      }
    }
    if (i0 == 0)
      raise(Errc::BoundNotMet,
            "no part with frequency at least 2*k1^5 + k1^3 to borrow from");
    const Int sigma = s * f + i0 * q;
    const Int beta = sigma % d;
    trace.aux["i0"] = i0;
    trace.aux["sigma"] = sigma;
    trace.aux["beta"] = beta;
    image.add(i0, -q);
    if (beta == 0) {
      trace.case_label = "2a";
      sol = solve_window_or(Errc::BoundNotMet, k2, k1, sigma, d + f - 1, "t1 case 2a");
    } else {
      trace.case_label = "2b";
      sol = solve_window_or(Errc::BoundNotMet, k2, k1, sigma - (k2 + beta),
                            d + k1_cubed + f - 1, "t1 case 2b");
      image.add(k2 + beta, 1);
    }
  }
  image.set_freq(k2, sol.x);
  image.set_freq(k1, sol.y);
  trace.aux["x"] = sol.x;
  trace.aux["y"] = sol.y;

  check(image.weight() == p.weight(), "t1: image weight drifted");
  check(is_member(image, t1_target(c)), "t1: image left the target class");
  auto region = t1_intervals(c).case_of(sol.x);
  check(region && *region == trace.case_label, "t1: image outside its case interval");
  return {std::move(image), std::move(trace)};
}

MapTrace recover_t1(const Partition& image, const ClassParams& c) {
  require_t1_params(c);
  const auto vd = c.v_desc();
  const Int k1 = vd[0], k2 = vd[1];
  const Int d = gcd(k1, k2);
  const Int s = c.s;
  const Int k1_cubed = ipow(k1, 3);
  const Int q = 2 * ipow(k1, 5) + k1_cubed;

  const Int x = image.freq(k2);
  const Int y = image.freq(k1);
  auto label = t1_intervals(c).case_of(x);
  if (!label)
    raise(Errc::NotInRange, "k2 frequency lies beyond every case interval");
  if (image.freq(s) != 0)
    raise(Errc::NotInRange, "an attained image never contains the part s");

  Partition pre = image;
  pre.set_freq(k2, 0);
  pre.set_freq(k1, 0);
  Int f;
  if (*label == "1a") {
    const Int total = k2 * x + k1 * y;  // equals s*f for an attained image
    if (total % s != 0)
      raise(Errc::NotInRange, "pair weight is not a multiple of s");
    f = total / s;
    if (f <= k1_cubed) raise(Errc::NotInRange, "case 1 requires f > k1^3");
  } else if (*label == "1b") {
    const Int alpha = x / k1;  // the window index, in [1, d)
    take_or_not_in_range(pre, k2 + alpha, 1);
    const Int total = k2 * x + k1 * y + k2 + alpha;
    if (total % s != 0)
      raise(Errc::NotInRange, "pair weight plus marker is not a multiple of s");
    f = total / s;
    if (f <= k1_cubed) raise(Errc::NotInRange, "case 1 requires f > k1^3");
    if ((s * f) % d != alpha)
      raise(Errc::NotInRange, "window index disagrees with the s-residue");
  } else if (*label == "2a") {
    f = x / k1 - d + 1;  // window index d + f - 1
    if (f < 1 || f > k1_cubed)
      raise(Errc::NotInRange, "recovered f outside (0, k1^3]");
    const Int rest = k2 * x + k1 * y - s * f;
    if (rest <= 0 || rest % q != 0)
      raise(Errc::NotInRange, "borrowed bulk is not a multiple of 2*k1^5 + k1^3");
    const Int i0 = rest / q;
    if (i0 <= s || i0 > Int(c.L) + s)
      raise(Errc::NotInRange, "borrowed part outside the window");
    pre.add(i0, q);
  } else {  // 2b
    f = x / k1 - d - k1_cubed + 1;  // window index d + k1^3 + f - 1
    if (f < 1 || f > k1_cubed)
      raise(Errc::NotInRange, "recovered f outside (0, k1^3]");
    const Int rest = k2 * x + k1 * y - s * f;  // equals i0*q - (k2 + beta)
    if (rest <= 0) raise(Errc::NotInRange, "negative borrowed bulk");
    const Int i0 = rest / q + 1;
    const Int beta = (s * f + i0 * q) % d;
    if (beta == 0) raise(Errc::NotInRange, "case 2b needs a nonzero residue");
    if (k2 * x + k1 * y != s * f + i0 * q - (k2 + beta))
      raise(Errc::NotInRange, "weight balance fails for the recovered i0");
    if (i0 <= s || i0 > Int(c.L) + s)
      raise(Errc::NotInRange, "borrowed part outside the window");
    take_or_not_in_range(pre, k2 + beta, 1);
    pre.add(i0, q);
  }
  pre.set_freq(s, f);
  if (!is_member(pre, c))
    raise(Errc::NotInRange, "candidate preimage is not in the domain class");

  MapResult fwd;
  try {
    fwd = apply_t1(pre, c);
  } catch (const Error& e) {
    if (e.code() == Errc::Internal) throw;
    raise(Errc::NotInRange, std::string("candidate preimage does not map: ") + e.what());
  }
  if (fwd.image != image)
    raise(Errc::NotInRange, "candidate preimage maps to a different image");
  return fwd.trace;
}

// ---------------------------------------------------------------------------
// Power-frequency map (t3)

namespace {

// Constants determined by (s, t, V) alone, computed once per call chain.
struct T3Setup {
  Int A, B, Fst;
  Int eight_sB;            // 8 s B, the borrowed bulk of case 2a
  long u0 = 0;        // first u in [0, t] whose pair avoids V
  Int pair_a, pair_b;      // s + 2u0 + 1, s + 2u0 + 2
  long p0 = 0;        // first p in [1, t+1] whose quartet avoids V
  Int qa, qb, qc, qd;      // 5psB+1, 5psB+2, 10psB-1, 15psB-2 at p = p0
  std::vector<long> kdesc;
};

void require_t3_params(const ClassParams& c) {
  c.validate();
  if (c.kind != ClassKind::DV)
    raise(Errc::Domain, "the t3 map takes kind-DV parameters");
  if (c.L < 2 * c.t() + 2)
    raise(Errc::Domain, "the t3 map needs L >= 2t+2");
}

T3Setup t3_setup(const ClassParams& c) {
  const long s = c.s, t = c.t();
  T3Setup u;
  u.A = bounds::A_st(s, t);
  u.B = bounds::B_st(s, t);
  u.Fst = bounds::F_st(s, t);
  u.eight_sB = 8 * s * u.B;
  u.kdesc = c.v_desc();

  bool found = false;
  for (long k = 0; k <= t; ++k) {
    Int a = s + 2 * k + 1, b = s + 2 * k + 2;
    if (!c.in_v(a) && !c.in_v(b)) {
      u.u0 = k;
      u.pair_a = a;
      u.pair_b = b;
      found = true;
      break;
    }
  }
  // |V| = t cannot block all t+1 disjoint pairs.
  check(found, "t3: no V-free consecutive pair");

  found = false;
  for (long p = 1; p <= t + 1; ++p) {
    Int base = 5 * p * s * u.B;
    Int a = base + 1, b = base + 2, g = 2 * base - 1, d = 3 * base - 2;
    if (!c.in_v(a) && !c.in_v(b) && !c.in_v(g) && !c.in_v(d)) {
      u.p0 = p;
      u.qa = a;
      u.qb = b;
      u.qc = g;
      u.qd = d;
      found = true;
      break;
    }
  }
  // The 4(t+1) quartet values are pairwise distinct, so t marks cannot
  // block all t+1 quartets.
  check(found, "t3: no V-free quartet");
  return u;
}

ClassParams t3_target(const ClassParams& c) {
  return ClassParams{c.L, c.s, c.V, ClassKind::I};
}

}  // namespace

std::optional<T2Class> classify_s_frequency(long s, long t, const Int& sfreq) {
  if (s < 1 || t < 1) raise(Errc::Domain, "classify_s_frequency: s, t must be positive");
  if (sfreq < 1) return std::nullopt;
  const Int A = bounds::A_st(s, t);
  const Int B = bounds::B_st(s, t);
  const Int r = sfreq % B;
  if (r >= 1 && r <= B - A) {
    // Region 1: sfreq = psi + A*(j-1) + 1 with psi >= A and block index j.
    const Int j = (sfreq - 1) / B;
    T2Class out;
    out.case_label = "1";
    out.region = 1;
    out.psi = sfreq - 1 - A * (j - 1);
    return out;
  }
  const Int cq = (sfreq + B - 1) / B;  // block count: sfreq in ((cq-1)B, cqB]
  const Int psi = cq * B - sfreq;
  if (psi < 1 || psi >= A) return std::nullopt;  // ranks start at 1
  if (cq >= 1 && cq <= 6) {
    static const char* kLabels[6] = {"2b.i",     "2b.ii",    "2b.iii.A",
                                     "2b.iii.B", "2b.iii.C", "2b.iii.D"};
    const unsigned long idx = cq.get_ui() - 1;
    T2Class out;
    out.case_label = kLabels[idx];
    out.region = static_cast<int>(idx) + 2;
    out.psi = psi;
    return out;
  }
  if (cq % 7 == 0) {
    const Int h0 = cq / 7;
    if (h0 >= s + 1 && h0 < bounds::F_st(s, t)) {
      T2Class out;
      out.case_label = "2a";
      out.region = 8;
      out.psi = psi;
      out.h0 = h0;
      return out;
    }
  }
  return std::nullopt;
}

MapResult apply_t3(const Partition& p, const ClassParams& c) {
  require_t3_params(c);
  if (!is_member(p, c))
    raise(Errc::Membership, "partition is not in the domain class");

  const long t = c.t();
  const Int s = c.s;
  const T3Setup u = t3_setup(c);

  // Frequency roots of the marked parts, largest part first.
  std::vector<Int> m(t);
  Int marked_weight = 0;
  for (long i = 0; i < t; ++i) {
    const Int fk = p.freq(u.kdesc[i]);
    check(perfect_root(fk, static_cast<unsigned long>(t), m[i]),
          "t3: marked frequency is not a perfect power after membership");
    marked_weight += u.kdesc[i] * fk;
  }
  const Int psi = psi_rank(m);

  Partition image = p;
  for (long k : u.kdesc) image.set_freq(k, 0);
  MapTrace trace;
  trace.aux["psi"] = psi;
  Int sfreq;
  LinearSolution sol;

  if (psi >= u.A) {
    // Case 1: psi itself indexes into region 1, stretched blockwise so the
    // s-frequency lands in block j.
    const Int j = (psi - u.A) / (u.B - u.A);
    sfreq = psi + u.A * (j - 1) + 1;
    trace.case_label = "1";
    trace.aux["j"] = j;
    trace.aux["u0"] = u.u0;
    sol = solve_or(Errc::BoundNotMet, u.pair_a, u.pair_b, marked_weight - s * sfreq,
                   "t3 case 1");
    image.add(u.pair_a, sol.x);
    image.add(u.pair_b, sol.y);
  } else {
    // Case 2: psi is small, so the s-frequency must be pushed up by other
    // means: borrowed copies of a frequent part (2a) or a marker pattern
    // around multiples of B (2b).
    Int h0 = 0;
    for (const auto& [part, pf] : p.parts()) {
      if (part >= u.Fst) break;
      if (c.in_v(part)) continue;  // marked parts are re-encoded, not borrowed
      if (pf >= u.eight_sB) {
        h0 = part;
        break;
      }
    }
    if (h0 != 0) {
      trace.case_label = "2a";
      trace.aux["u0"] = u.u0;
      trace.aux["h0"] = h0;
      sfreq = 7 * h0 * u.B - psi;
      sol = solve_or(Errc::BoundNotMet, u.pair_a, u.pair_b,
                     marked_weight + u.eight_sB * h0 - s * sfreq, "t3 case 2a");
      image.add(h0, -u.eight_sB);
      image.add(u.pair_a, sol.x);
      image.add(u.pair_b, sol.y);
    } else {
      trace.aux["p0"] = u.p0;
      const Int fa = p.freq(u.qa), fb = p.freq(u.qb);
      const Int fc = p.freq(u.qc), fd = p.freq(u.qd);
      if (fa >= 1 && fc >= 1) {
        trace.case_label = "2b.i";
        trace.aux["u0"] = u.u0;
        sfreq = u.B - psi;
        sol = solve_or(Errc::BoundNotMet, u.pair_a, u.pair_b,
                       15 * u.p0 * s * u.B + marked_weight - s * sfreq, "t3 case 2b.i");
        image.add(u.qa, -1);
        image.add(u.qc, -1);
        image.add(u.pair_a, sol.x);
        image.add(u.pair_b, sol.y);
      } else if (fb >= 1 && fd >= 1) {
        trace.case_label = "2b.ii";
        trace.aux["u0"] = u.u0;
        sfreq = 2 * u.B - psi;
        sol = solve_or(Errc::BoundNotMet, u.pair_a, u.pair_b,
                       20 * u.p0 * s * u.B + marked_weight - s * sfreq, "t3 case 2b.ii");
        image.add(u.qb, -1);
        image.add(u.qd, -1);
        image.add(u.pair_a, sol.x);
        image.add(u.pair_b, sol.y);
      } else {
        // Both quartet pairs are broken; one of the four zero patterns
        // must hold, and it selects the helper pair (e1, e2). The balance
        // needs one unmarked reservoir part at or above F(s,t).
        Int l0 = 0;
        for (const auto& [part, pf] : p.parts()) {
          if (part < u.Fst || c.in_v(part)) continue;
          l0 = part;
          break;
        }
        if (l0 == 0)
          raise(Errc::BoundNotMet,
                "no part is frequent enough and none reaches F(s,t)");
        Int e1, e2, mult;
        if (fa == 0 && fb == 0) {
          trace.case_label = "2b.iii.A";
          e1 = u.qa;
          e2 = u.qb;
          mult = 3;
        } else if (fa == 0 && fd == 0) {
          trace.case_label = "2b.iii.B";
          e1 = u.qa;
          e2 = u.qd;
          mult = 4;
        } else if (fc == 0 && fb == 0) {
          trace.case_label = "2b.iii.C";
          e1 = u.qc;
          e2 = u.qb;
          mult = 5;
        } else if (fc == 0 && fd == 0) {
          trace.case_label = "2b.iii.D";
          e1 = u.qc;
          e2 = u.qd;
          mult = 6;
        } else {
          raise(Errc::Internal, "t3: quartet case routing exhausted");
        }
        trace.aux["l0"] = l0;
        sfreq = mult * u.B - psi;
        sol = solve_or(Errc::BoundNotMet, e1, e2, l0 + marked_weight - s * sfreq,
                       "t3 case 2b.iii");
        if (sol.x > 0 && e1 > Int(c.L) + s)
          raise(Errc::BoundNotMet, "helper part exceeds the window");
        if (sol.y > 0 && e2 > Int(c.L) + s)
          raise(Errc::BoundNotMet, "helper part exceeds the window");
        image.add(l0, -1);
        image.set_freq(e1, sol.x);
        image.set_freq(e2, sol.y);
      }
    }
  }
  check(sfreq >= 1, "t3: nonpositive s-frequency");
  image.set_freq(s, sfreq);
  trace.aux["x"] = sol.x;
  trace.aux["y"] = sol.y;

  check(image.weight() == p.weight(), "t3: image weight drifted");
  check(is_member(image, t3_target(c)), "t3: image left the target class");
  auto cls = classify_s_frequency(c.s, t, sfreq);
  check(cls && cls->case_label == trace.case_label,
        "t3: s-frequency landed outside its region");
  return {std::move(image), std::move(trace)};
}

MapTrace recover_t3(const Partition& image, const ClassParams& c) {
  require_t3_params(c);
  const long t = c.t();
  const Int s = c.s;
  const T3Setup u = t3_setup(c);

  const Int sfreq = image.freq(s);
  if (sfreq < 1) raise(Errc::NotInRange, "image must contain the part s");
  auto cls = classify_s_frequency(c.s, t, sfreq);
  if (!cls) raise(Errc::NotInRange, "s-frequency lies in no encoding region");
  for (long k : u.kdesc)
    if (image.freq(k) != 0)
      raise(Errc::NotInRange, "an attained image never contains a marked part");

  std::vector<Int> m = psi_unrank(cls->psi, static_cast<std::size_t>(t));
  Partition pre = image;
  pre.set_freq(s, 0);
  Int marked_weight = 0;
  for (long i = 0; i < t; ++i) {
    const Int fk = ipow(m[i], static_cast<unsigned long>(t));
    pre.set_freq(u.kdesc[i], fk);
    marked_weight += u.kdesc[i] * fk;
  }

  auto pair_solution = [&](const Int& rhs) {
    LinearSolution sol = solve_or(Errc::NotInRange, u.pair_a, u.pair_b, rhs,
                                  "t3 recovery");
    take_or_not_in_range(pre, u.pair_a, sol.x);
    take_or_not_in_range(pre, u.pair_b, sol.y);
  };

  if (cls->case_label == "1") {
    pair_solution(marked_weight - s * sfreq);
  } else if (cls->case_label == "2a") {
    pair_solution(marked_weight + u.eight_sB * cls->h0 - s * sfreq);
    pre.add(cls->h0, u.eight_sB);
  } else if (cls->case_label == "2b.i") {
    pair_solution(15 * u.p0 * s * u.B + marked_weight - s * sfreq);
    pre.add(u.qa, 1);
    pre.add(u.qc, 1);
  } else if (cls->case_label == "2b.ii") {
    pair_solution(20 * u.p0 * s * u.B + marked_weight - s * sfreq);
    pre.add(u.qb, 1);
    pre.add(u.qd, 1);
  } else {
    Int e1, e2;
    if (cls->case_label == "2b.iii.A") {
      e1 = u.qa;
      e2 = u.qb;
    } else if (cls->case_label == "2b.iii.B") {
      e1 = u.qa;
      e2 = u.qd;
    } else if (cls->case_label == "2b.iii.C") {
      e1 = u.qc;
      e2 = u.qb;
    } else {
      e1 = u.qc;
      e2 = u.qd;
    }
    const Int x = image.freq(e1), y = image.freq(e2);
    const Int l0 = s * sfreq + e1 * x + e2 * y - marked_weight;
    if (l0 < u.Fst)
      raise(Errc::NotInRange, "reconstructed reservoir part is below F(s,t)");
    if (l0 > Int(c.L) + s)
      raise(Errc::NotInRange, "reconstructed reservoir part exceeds the window");
    pre.set_freq(e1, 0);
    pre.set_freq(e2, 0);
    pre.add(l0, 1);
  }

  if (!is_member(pre, c))
    raise(Errc::NotInRange, "candidate preimage is not in the domain class");
  MapResult fwd;
  try {
    fwd = apply_t3(pre, c);
  } catch (const Error& e) {
    if (e.code() == Errc::Internal) throw;
    raise(Errc::NotInRange, std::string("candidate preimage does not map: ") + e.what());
  }
  if (fwd.image != image)
    raise(Errc::NotInRange, "candidate preimage maps to a different image");
  return fwd.trace;
}

// ---------------------------------------------------------------------------
// Alternate map (alt)

namespace {

void require_alt_params(const ClassParams& c) {
  c.validate();
  if (c.kind != ClassKind::DV)
    raise(Errc::Domain, "the alt map takes kind-DV parameters");
  const long t = c.t();
  const Int k_min = c.V.front();  // V ascending, so the smallest marked part
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t));
  const Int threshold =
      (ipow(Int(2), static_cast<unsigned long>(t) + 4) * c.s + Int(c.s) * c.s) *
      ipow(Int(t), static_cast<unsigned long>(t));
  if (k_min * fact < threshold)
    raise(Errc::Domain, "smallest marked part is below the alt-map threshold");
}

}  // namespace

MapResult apply_alt(const Partition& p, const ClassParams& c) {
  require_alt_params(c);
  if (!is_member(p, c))
    raise(Errc::Membership, "partition is not in the domain class");

  const long t = c.t();
  const Int s = c.s;
  const auto kdesc = c.v_desc();

  std::vector<Int> m(t);
  Int marked_weight = 0;
  bool any = false;
  for (long i = 0; i < t; ++i) {
    const Int fk = p.freq(kdesc[i]);
    check(perfect_root(fk, static_cast<unsigned long>(t), m[i]),
          "alt: marked frequency is not a perfect power after membership");
    marked_weight += kdesc[i] * fk;
    if (m[i] != 0) any = true;
  }
  if (!any)
    raise(Errc::Unsupported, "alt map is out of scope when every marked part is absent");

  // Support pattern gamma (bit i set when the i-th largest marked part
  // occurs) plus the rank of the nonzero subtuple pin down the full tuple.
  Int gamma = 0;
  std::vector<Int> nonzero;
  for (long i = 0; i < t; ++i) {
    if (m[i] != 0) {
      gamma += ipow(Int(2), static_cast<unsigned long>(i));
      nonzero.push_back(m[i]);
    }
  }
  const Int rank = cns_rank(nonzero);
  const Int modulus = ipow(Int(2), static_cast<unsigned long>(t) + 4);
  const Int sfreq = modulus * rank - (2 * gamma - 1);

  LinearSolution sol = solve_or(Errc::BoundNotMet, s + 1, s + 2,
                                marked_weight - s * sfreq, "alt map");
  Partition image = p;
  for (long k : kdesc) image.set_freq(k, 0);
  image.set_freq(s, sfreq);
  image.add(s + 1, sol.x);
  image.add(s + 2, sol.y);

  MapTrace trace;
  trace.case_label = "2";
  trace.aux["gamma"] = gamma;
  trace.aux["cns"] = rank;
  trace.aux["x"] = sol.x;
  trace.aux["y"] = sol.y;

  check(sfreq % 2 == 1 && sfreq >= 7 * ipow(Int(2), static_cast<unsigned long>(t) + 1) + 1,
        "alt: s-frequency parity or size invariant broken");
  check(image.weight() == p.weight(), "alt: image weight drifted");
  check(is_member(image, t3_target(c)), "alt: image left the target class");
  return {std::move(image), std::move(trace)};
}

MapTrace recover_alt(const Partition& image, const ClassParams& c) {
  require_alt_params(c);
  const long t = c.t();
  const Int s = c.s;
  const auto kdesc = c.v_desc();

  const Int sfreq = image.freq(s);
  if (sfreq < 1) raise(Errc::NotInRange, "image must contain the part s");
  const Int modulus = ipow(Int(2), static_cast<unsigned long>(t) + 4);
  const Int r = sfreq % modulus;
  if (r % 2 == 0) raise(Errc::NotInRange, "s-frequency has the wrong parity");
  const Int gamma = (modulus + 1 - r) / 2;
  if (gamma < 1 || gamma > ipow(Int(2), static_cast<unsigned long>(t)) - 1)
    raise(Errc::NotInRange, "support pattern out of range");
  const Int rank = (sfreq + 2 * gamma - 1) / modulus;
  check((sfreq + 2 * gamma - 1) % modulus == 0, "alt recovery: residue arithmetic");

  std::vector<std::size_t> bits;
  for (long i = 0; i < t; ++i)
    if (mpz_tstbit(gamma.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) bits.push_back(i);
  auto nonzero = cns_unrank(rank, bits.size());
  if (!nonzero)
    raise(Errc::NotInRange, "rank is not attained by any positive subtuple");

  std::vector<Int> m(t, Int(0));
  for (std::size_t j = 0; j < bits.size(); ++j) m[bits[j]] = (*nonzero)[j];

  for (long k : kdesc)
    if (image.freq(k) != 0)
      raise(Errc::NotInRange, "an attained image never contains a marked part");
  Partition pre = image;
  pre.set_freq(s, 0);
  Int marked_weight = 0;
  for (long i = 0; i < t; ++i) {
    const Int fk = ipow(m[i], static_cast<unsigned long>(t));
    pre.set_freq(kdesc[i], fk);
    marked_weight += kdesc[i] * fk;
  }
  LinearSolution sol = solve_or(Errc::NotInRange, s + 1, s + 2,
                                marked_weight - s * sfreq, "alt recovery");
  take_or_not_in_range(pre, s + 1, sol.x);
  take_or_not_in_range(pre, s + 2, sol.y);

  if (!is_member(pre, c))
    raise(Errc::NotInRange, "candidate preimage is not in the domain class");
  MapResult fwd;
  try {
    fwd = apply_alt(pre, c);
  } catch (const Error& e) {
    if (e.code() == Errc::Internal) throw;
    raise(Errc::NotInRange, std::string("candidate preimage does not map: ") + e.what());
  }
  if (fwd.image != image)
    raise(Errc::NotInRange, "candidate preimage maps to a different image");
  return fwd.trace;
}

MapResult apply_map(MapId id, const Partition& p, const ClassParams& c) {
  switch (id) {
    case MapId::T1: return apply_t1(p, c);
    case MapId::T3: return apply_t3(p, c);
    case MapId::Alt: return apply_alt(p, c);
  }
  raise(Errc::Internal, "unknown map id");
}

MapTrace recover_map(MapId id, const Partition& image, const ClassParams& c) {
  switch (id) {
    case MapId::T1: return recover_t1(image, c);
    case MapId::T3: return recover_t3(image, c);
    case MapId::Alt: return recover_alt(image, c);
  }
  raise(Errc::Internal, "unknown map id");
}

// ---------------------------------------------------------------------------
// Region disjointness scans

namespace {

struct RegionScanConsts {
  unsigned long b, bma;  // B and B - A
  unsigned long f_cap;   // block index cap 7*F(s,t) clamped to the range
  long s;
};

RegionScanConsts region_scan_consts(long s, long t, unsigned long hi) {
  if (s < 1 || t < 1) raise(Errc::Domain, "region scan: s, t must be positive");
  const Int A = bounds::A_st(s, t);
  const Int B = bounds::B_st(s, t);
  const Int F = bounds::F_st(s, t);
  RegionScanConsts k;
  if (!B.fits_ulong_p())
    raise(Errc::Resource, "region scan: B does not fit in machine words");
  k.b = B.get_ui();
  if (hi > ~0UL - k.b)
    raise(Errc::Resource, "region scan: range too close to the word limit");
  k.bma = k.b - A.get_ui();  // A < B always
  Int cap = 7 * F;
  k.f_cap = cap.fits_ulong_p() ? cap.get_ui() : ~0ULL;
  k.s = s;
  return k;
}

// Number of encoding regions claiming block-c residues above B - A.
inline unsigned candidate_regions(unsigned long c, const RegionScanConsts& k) {
  const unsigned six = (c >= 1 && c <= 6) ? 1u : 0u;
  const unsigned seven =
      (c % 7 == 0 && c / 7 >= static_cast<unsigned long>(k.s) + 1 && c < k.f_cap)
          ? 1u
          : 0u;
  return six + seven;
}

}  // namespace

unsigned long region_overlap_count(long s, long t, unsigned long hi) {
  const RegionScanConsts k = region_scan_consts(s, t, hi);
  unsigned long bad = 0;
  const unsigned long blocks = hi / k.b + (hi % k.b != 0);
  for (unsigned long c = 1; c <= blocks; ++c) {
    const unsigned long base = (c - 1) * k.b;
    const unsigned long block_end = std::min(hi, base + k.b);
    const unsigned long band_end = std::min(block_end, base + k.bma);
    // Residues 1..B-A of block c belong to region 1 and to nothing else;
    // every residue above B-A is claimed once by each candidate region,
    // so the block contributes its upper-band width when two candidates
    // claim it and nothing otherwise.
    const unsigned cand = candidate_regions(c, k);
    if (cand > 1u) bad += block_end - band_end;
  }
  return bad;
}

unsigned long region_overlap_first(long s, long t, unsigned long hi) {
  const RegionScanConsts k = region_scan_consts(s, t, hi);
  for (unsigned long n = 1; n <= hi; ++n) {
    const unsigned long c = (n + k.b - 1) / k.b;
    const unsigned long rp = n - (c - 1) * k.b;
    const unsigned hits = (rp <= k.bma) ? 1u : candidate_regions(c, k);
    if (hits > 1) return n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Verification harness

VerifyReport verify_injection(const ClassParams& domain, MapId map, const Int& n) {
  domain.validate();
  const ClassKind expected = (map == MapId::T1) ? ClassKind::I : ClassKind::DV;
  if (domain.kind != expected)
    raise(Errc::Domain, std::string("map ") + to_string(map) + " verifies a kind-" +
                            (expected == ClassKind::I ? "I" : "DV") + " domain");

  VerifyReport rep;
  rep.map = map;
  rep.domain = domain;
  rep.n = n;

  const ClassParams target = (map == MapId::T1) ? t1_target(domain) : t3_target(domain);
  const std::vector<Partition> members = enumerate_class(domain, n);
  rep.domain_size = members.size();

  constexpr std::size_t kMaxNotes = 20;
  auto note = [&](const Partition& member, const std::string& msg) {
    if (rep.notes.size() < kMaxNotes)
      rep.notes.push_back(serialize(member) + ": " + msg);
  };

  std::set<std::string> images;
  for (const Partition& member : members) {
    MapResult res;
    try {
      res = apply_map(map, member, domain);
    } catch (const Error& e) {
      if (e.code() == Errc::BoundNotMet) {
        ++rep.bound_not_met;
      } else {
        ++rep.failures;
      }
      note(member, e.what());
      continue;
    }
    bool ok = true;
    if (res.image.weight() != member.weight()) {
      ok = false;
      note(member, "weight not conserved");
    }
    if (ok && !is_member(res.image, target)) {
      ok = false;
      note(member, "image not in the target class");
    }
    if (ok) {
      // Image-side region membership, per map.
      if (map == MapId::T1) {
        const T1Intervals iv = t1_intervals(domain);
        auto region = iv.case_of(res.image.freq(iv.k2));
        ok = region && *region == res.trace.case_label;
      } else if (map == MapId::T3) {
        auto cls = classify_s_frequency(domain.s, domain.t(),
                                        res.image.freq(Int(domain.s)));
        ok = cls && cls->case_label == res.trace.case_label;
      } else {
        const Int sfreq = res.image.freq(Int(domain.s));
        const Int floor_val =
            7 * ipow(Int(2), static_cast<unsigned long>(domain.t()) + 1) + 1;
        ok = (sfreq % 2 == 1) && sfreq >= floor_val;
      }
      if (!ok) note(member, "image outside its encoding region");
    }
    if (ok) {
      try {
        MapTrace back = recover_map(map, res.image, domain);
        if (back != res.trace) {
          ok = false;
          note(member, "recovered trace differs");
        }
      } catch (const Error& e) {
        ok = false;
        note(member, std::string("recovery failed: ") + e.what());
      }
    }
    if (!ok) {
      ++rep.failures;
      continue;
    }
    ++rep.mapped;
    ++rep.per_case[res.trace.case_label];
    images.insert(serialize(res.image));
  }
  rep.collisions = rep.mapped - images.size();
  return rep;
}

std::string to_json(const MapTrace& trace) {
  detail::json aux = detail::json::object();
  for (const auto& [key, value] : trace.aux) aux[key] = value.get_str();
  return detail::json{{"case", trace.case_label}, {"aux", std::move(aux)}}.dump();
}

std::string to_json(const VerifyReport& report) {
  detail::json per_case = detail::json::object();
  for (const auto& [label, count] : report.per_case) per_case[label] = count;
  detail::json j{
      {"map", to_string(report.map)},
      {"domain", detail::params_to_json(report.domain)},
      {"n", report.n.get_str()},
      {"domain_size", report.domain_size},
      {"mapped", report.mapped},
      {"bound_not_met", report.bound_not_met},
      {"failures", report.failures},
      {"collisions", report.collisions},
      {"per_case", std::move(per_case)},
      {"notes", report.notes},
  };
  return j.dump();
}

// ---------------------------------------------------------------------------
// Numeric lemma checks

namespace lemmas {

bool comb_holds(const std::vector<long>& m) {
  const std::size_t t = m.size();
  if (t == 0) raise(Errc::Domain, "comb_holds: empty tuple");
  std::vector<Int> tuple;
  tuple.reserve(t);
  Int power_sum = 0;
  for (long e : m) {
    if (e < 1) raise(Errc::Domain, "comb_holds: entries must be positive");
    tuple.push_back(e);
    power_sum += ipow(Int(e), static_cast<unsigned long>(t));
  }
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t));
  return ipow(Int(t), static_cast<unsigned long>(t)) * power_sum >=
         fact * cns_rank(tuple);
}

bool crucial1_holds(long s, long t, const Int& h) {
  if (s < 1 || t < 1 || h < 1) raise(Errc::Domain, "crucial1_holds: bad arguments");
  return 2 * Int(s) * ipow(h + 1, static_cast<unsigned long>(t)) <=
         (2 * Int(s) + 1) * ipow(h, static_cast<unsigned long>(t));
}

ScanResult comb_scan(long t_max, long entry_max) {
  if (t_max < 1 || entry_max < 1) raise(Errc::Domain, "comb_scan: bad arguments");
  ScanResult r;
  for (long t = 1; t <= t_max; ++t) {
    std::vector<long> m(t, 1);
    while (true) {
      ++r.checked;
      if (!comb_holds(m) && !r.first_violation) {
        std::string tup;
        for (long e : m) tup += std::to_string(e) + ",";
        r.first_violation = "t=" + std::to_string(t) + " m=(" + tup + ")";
        return r;
      }
      // odometer over [1, entry_max]^t
      long i = t - 1;
      while (i >= 0 && m[i] == entry_max) m[i--] = 1;
      if (i < 0) break;
      ++m[i];
    }
  }
  return r;
}

ScanResult crucial1_scan(long s_max, long t_max) {
  if (s_max < 1 || t_max < 1) raise(Errc::Domain, "crucial1_scan: bad arguments");
  ScanResult r;
  for (long s = 1; s <= s_max; ++s) {
    for (long t = 1; t <= t_max; ++t) {
      const Int h0 = 2 * Int(s) * t * t;
      const Int samples[] = {h0, Int(h0 + 7)};
      for (const Int& h : samples) {
        ++r.checked;
        if (!crucial1_holds(s, t, h) && !r.first_violation) {
          r.first_violation = "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                              " h=" + h.get_str();
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace lemmas

}  // namespace partineq
