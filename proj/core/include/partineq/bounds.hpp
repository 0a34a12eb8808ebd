#pragma once

#include <string>
#include <vector>

#include "partineq/bigint.hpp"

namespace partineq {
namespace bounds {

// Weight threshold for the two-marked-parts map: 2(L+s)^7 + (L+s)^5.
Int t1_bound(long L, long s);

// Weight threshold for the power-frequency map:
// (10s)^5 * (t+1)^4 * (39 s^2 t^3)^(5t).
Int t3_bound(long s, long t);

// Frequency threshold separating small parts from the reservoir part:
// F_st = 156 s^2 (t+1)^2 * B(s,t).
Int F_st(long s, long t);

// Single-marked-part variant: F_s = (10s-2)(15s-3) + 8s.
Int F_s(long s);

// kappa_s = (12s-1) * sum_{i=s+1}^{F_s(s)-1} i + 1; stays below (15s)^5.
Int kappa_s(long s);

// Rank-band radius A = (12 s t^3)^t and block modulus B = (39 s^2 t^3)^t
// used by the s-frequency encoding regions.
Int A_st(long s, long t);
Int B_st(long s, long t);

// Threshold on the smallest marked part for the alternate map:
// (2^(t+4) s + s^2) t^t / t!, exact rational.
Rat alt_kt_bound(long s, long t);

// Name-based dispatcher backing the CLI: names are t1_bound, t3_bound,
// F_st, F_s, kappa_s, A, B, alt_kt_bound. Returns the decimal value,
// or "p/q" for a non-integer rational.
std::string evaluate(const std::string& name, const std::vector<long>& args);

}  // namespace bounds
}  // namespace partineq
