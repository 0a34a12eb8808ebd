#include "partineq/qseries.hpp"

#include "json_io.hpp"
#include "partineq/partition.hpp"

namespace partineq {

std::size_t Series::nonzero_count() const {
  std::size_t k = 0;
  for (const Int& c : coeff_)
    if (c != 0) ++k;
  return k;
}

namespace {

void require_same_truncation(const Series& a, const Series& b) {
  if (a.nmax() != b.nmax())
    raise(Errc::Domain, "series truncation orders differ");
}

}  // namespace

Series mul(const Series& a, const Series& b) {
  require_same_truncation(a, b);
  const std::size_t nmax = a.nmax();
  const Series& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const Series& inner = (&outer == &a) ? b : a;
  Series r(nmax);
  for (std::size_t j = 0; j <= nmax; ++j) {
    if (outer[j] == 0) continue;
    for (std::size_t i = 0; i + j <= nmax; ++i) {
      if (inner[i] != 0) r[i + j] += inner[i] * outer[j];
    }
  }
  return r;
}

Series sub(const Series& a, const Series& b) {
  require_same_truncation(a, b);
  Series r(a.nmax());
  for (std::size_t n = 0; n <= a.nmax(); ++n) r[n] = a[n] - b[n];
  return r;
}

Series inv_pochhammer(long a, long terms, std::size_t nmax) {
  if (a < 1) raise(Errc::Domain, "inv_pochhammer: base exponent must be positive");
  if (terms < 0) raise(Errc::Domain, "inv_pochhammer: negative factor count");
  Series r = Series::one(nmax);
  for (long j = 0; j < terms; ++j) {
    // Multiply in place by 1/(1 - q^part): r[n] += r[n - part].
    const long part = a + j;
    if (static_cast<unsigned long>(part) > nmax) break;  // no effect below nmax
    for (std::size_t n = static_cast<std::size_t>(part); n <= nmax; ++n)
      r[n] += r[n - part];
  }
  return r;
}

Series power_freq_series(long k, long t, std::size_t nmax) {
  if (k < 1 || t < 1) raise(Errc::Domain, "power_freq_series: k and t must be positive");
  Series r(nmax);
  for (Int i = 0;; ++i) {
    Int e = Int(k) * ipow(i, static_cast<unsigned long>(t));
    if (e > static_cast<unsigned long>(nmax)) break;
    r[to_ulong(e, "power_freq_series exponent")] = 1;
  }
  return r;
}

namespace {

// Validates the window fields by borrowing the class parameter checks.
void validate_window(long L, long s, const std::vector<long>& V) {
  ClassParams c{L, s, V, ClassKind::I};
  c.validate();
}

Series one_minus_q_to(long k, std::size_t nmax) {
  Series f = Series::one(nmax);
  if (static_cast<unsigned long>(k) <= nmax) f[static_cast<std::size_t>(k)] = -1;
  return f;
}

// q^s / (q^s; q)_{L+1}: the forced-smallest-part window series.
Series forced_window(long L, long s, std::size_t nmax) {
  Series r = inv_pochhammer(s, L + 1, nmax);
  Series shifted(nmax);
  for (std::size_t n = nmax + 1; n-- > 0;) {
    if (static_cast<unsigned long>(s) <= n)
      shifted[n] = r[n - static_cast<std::size_t>(s)];
  }
  return shifted;
}

}  // namespace

Series h_series(long L, long s, const std::vector<long>& V,
                std::size_t nmax) {
  validate_window(L, s, V);
  Series first = forced_window(L, s, nmax);
  for (long k : V) first = mul(first, one_minus_q_to(k, nmax));
  Series second = inv_pochhammer(s + 1, L, nmax);
  second[0] -= 1;  // drop the empty partition
  return sub(first, second);
}

Series hprime_series(long L, long s, const std::vector<long>& V,
                     std::size_t nmax) {
  validate_window(L, s, V);
  const long t = static_cast<long>(V.size());
  Series first = forced_window(L, s, nmax);
  for (long k : V) first = mul(first, one_minus_q_to(k, nmax));
  Series second = inv_pochhammer(s + 1, L, nmax);
  for (long k : V) {
    second = mul(second, one_minus_q_to(k, nmax));
    second = mul(second, power_freq_series(k, t, nmax));
  }
  return sub(first, second);
}

Series hdoubleprime_series(long L, long s, const std::vector<long>& V,
                           std::size_t nmax) {
  validate_window(L, s, V);
  const long t = static_cast<long>(V.size());
  Series first = forced_window(L, s, nmax);
  Series second = inv_pochhammer(s + 1, L, nmax);
  for (long k : V) second = mul(second, power_freq_series(k, t, nmax));
  return sub(first, second);
}

SignReport sign_scan(const Series& f) {
  SignReport r;
  r.nmax = f.nmax();
  for (std::size_t n = 0; n <= f.nmax(); ++n) {
    if (f[n] > 0) r.last_positive = n;
    if (f[n] < 0) r.last_negative = n;
  }
  // The terminal run starts right after the last coefficient whose sign
  // conflicts with the final nonzero sign.
  if (!r.last_positive && !r.last_negative) {
    r.terminal_sign = '0';
    r.terminal_start = 0;
    return r;
  }
  const std::size_t last_pos = r.last_positive.value_or(0);
  const std::size_t last_neg = r.last_negative.value_or(0);
  if (r.last_positive && (!r.last_negative || last_pos > last_neg)) {
    r.terminal_sign = '+';
    r.terminal_start = r.last_negative ? last_neg + 1 : 0;
  } else {
    r.terminal_sign = '-';
    r.terminal_start = r.last_positive ? last_pos + 1 : 0;
  }
  return r;
}

std::string to_csv(const Series& f) {
  std::string out = "n,coeff\n";
  for (std::size_t n = 0; n <= f.nmax(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += f[n].get_str();
    out += '\n';
  }
  return out;
}

std::string to_json(const SignReport& r) {
  detail::json j;
  j["nmax"] = r.nmax;
  j["last_negative"] = r.last_negative ? detail::json(*r.last_negative) : detail::json(nullptr);
  j["last_positive"] = r.last_positive ? detail::json(*r.last_positive) : detail::json(nullptr);
  j["terminal_sign"] = std::string(1, r.terminal_sign);
  j["terminal_start"] = r.terminal_start;
  return j.dump();
}

}  // namespace partineq
