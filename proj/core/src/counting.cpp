#include "partineq/counting.hpp"

#include <algorithm>
#include <functional>

#include "json_io.hpp"

namespace partineq {

namespace {

constexpr std::size_t kEnumerationGuard = 10'000'000;

// One allowed part value. Unrestricted slots take any frequency >= 0;
// restricted slots only frequencies of the form i^exponent.
struct Slot {
  Int part;
  bool restricted = false;
  unsigned long exponent = 1;
};

// Part values a class draws from, largest first (better pruning). Parts
// above the weight cap cannot occur and are dropped, which also keeps the
// walk finite for window bounds far beyond the target weight.
std::vector<Slot> class_slots(const ClassParams& c, const Int& cap) {
  const bool restrict_v = (c.kind == ClassKind::DV || c.kind == ClassKind::E);
  const unsigned long exponent = restrict_v
      ? static_cast<unsigned long>(c.kind == ClassKind::DV ? c.t() : c.t() - 1)
      : 1;
  const Int lo = (c.kind == ClassKind::I || c.kind == ClassKind::S) ? c.s : c.s + 1;
  Int start = Int(c.L) + c.s;
  if (start > cap) start = cap;
  std::vector<Slot> slots;
  for (Int part = start; part >= lo; --part) {
    const bool in_v = c.in_v(part);
    if (in_v && c.kind == ClassKind::I) continue;  // kind I excludes V parts
    slots.push_back({part, in_v && restrict_v, exponent});
  }
  return slots;
}

}  // namespace

std::vector<Partition> enumerate_class(const ClassParams& c, const Int& n) {
  c.validate();
  if (c.kind == ClassKind::P)
    raise(Errc::Unsupported, "enumerate_class: kind P members are not plain partitions");
  if (n < 0) raise(Errc::Domain, "enumerate_class: weight must be nonnegative");

  // Classes with a forced smallest part reserve one copy of s up front.
  const bool forced_s = (c.kind == ClassKind::I || c.kind == ClassKind::S);
  Int target = forced_s ? Int(n - c.s) : n;
  std::vector<Partition> out;
  if (n == 0 || target < 0) return out;  // every kind here excludes the empty partition

  // Refuse oversized requests before allocating anything: the series count
  // bounds the result size exactly and costs only O(n * window) to compute.
  if (n <= 100'000'000) {
    const std::size_t nn = to_ulong(n, "enumerate_class weight");
    if (count_series(c, nn).counts[nn] >= kEnumerationGuard)
      raise(Errc::Resource, "enumerate_class: more than 10^7 members");
  }

  const std::vector<Slot> slots = class_slots(c, target);
  Partition acc;
  if (forced_s) acc.set_freq(c.s, 1);

  std::function<void(std::size_t, const Int&)> walk = [&](std::size_t i, const Int& rem) {
    if (i == slots.size()) {
      if (rem == 0) {
        if (out.size() >= kEnumerationGuard)
          raise(Errc::Resource, "enumerate_class: more than 10^7 members");
        out.push_back(acc);
      }
      return;
    }
    const Slot& slot = slots[i];
    if (!slot.restricted) {
      // Final unrestricted slot: the frequency is forced by divisibility.
      if (i + 1 == slots.size()) {
        if (rem % slot.part == 0) {
          Int f = rem / slot.part;
          acc.add(slot.part, f);
          walk(i + 1, 0);
          acc.add(slot.part, -f);
        }
        return;
      }
      Int added = 0;
      for (Int f = 0; f * slot.part <= rem; ++f) {
        if (f > 0) {
          acc.add(slot.part, 1);
          added += 1;
        }
        walk(i + 1, rem - f * slot.part);
      }
      acc.add(slot.part, -added);
    } else {
      Int prev = 0;
      for (Int base = 0;; ++base) {
        Int f = ipow(base, slot.exponent);
        if (f * slot.part > rem) break;
        acc.add(slot.part, f - prev);
        prev = f;
        walk(i + 1, rem - f * slot.part);
      }
      acc.add(slot.part, -prev);
    }
  };
  walk(0, target);

  std::sort(out.begin(), out.end());
  return out;
}

CountTable count_series(const ClassParams& c, std::size_t nmax) {
  c.validate();
  std::vector<Int> a(nmax + 1);
  a[0] = 1;

  // In-place multiplication by the geometric series 1/(1 - q^part).
  auto geometric = [&](long part) {
    for (std::size_t n = static_cast<std::size_t>(part); n <= nmax; ++n)
      a[n] += a[n - part];
  };
  // Out-of-place multiplication by sum_{i >= 0} q^(k * i^e): frequencies of
  // part k restricted to perfect e-th powers.
  auto power_factor = [&](long k, unsigned long e) {
    std::vector<Int> b = a;
    for (Int i = 1;; ++i) {
      Int off = Int(k) * ipow(i, e);
      if (off > static_cast<unsigned long>(nmax)) break;
      std::size_t o = to_ulong(off, "count_series offset");
      for (std::size_t n = o; n <= nmax; ++n) b[n] += a[n - o];
    }
    a = std::move(b);
  };
  // Multiplication by q^sh: shifts coefficients up, truncating at nmax.
  auto shift_up = [&](long sh) {
    for (std::size_t n = nmax + 1; n-- > 0;) {
      if (static_cast<unsigned long>(sh) <= n)
        a[n] = a[n - static_cast<std::size_t>(sh)];
      else
        a[n] = 0;
    }
  };

  const long hi = c.L + c.s;
  // Parts above nmax contribute nothing on [0, nmax].
  auto each_window_part = [&](long lo, bool skip_v, auto&& fn) {
    for (long j = lo; j <= hi && static_cast<unsigned long>(j) <= nmax; ++j) {
      if (skip_v && std::binary_search(c.V.begin(), c.V.end(), j)) continue;
      fn(j);
    }
  };

  switch (c.kind) {
    case ClassKind::I:
      if (static_cast<unsigned long>(c.s) <= nmax) geometric(c.s);
      each_window_part(c.s + 1, true, geometric);
      shift_up(c.s);
      break;
    case ClassKind::S:
      each_window_part(c.s, false, geometric);
      shift_up(c.s);
      break;
    case ClassKind::D:
      each_window_part(c.s + 1, false, geometric);
      a[0] = 0;
      break;
    case ClassKind::DV:
    case ClassKind::E: {
      each_window_part(c.s + 1, true, geometric);
      const unsigned long e =
          static_cast<unsigned long>(c.kind == ClassKind::DV ? c.t() : c.t() - 1);
      for (long k : c.V) power_factor(k, e);
      a[0] = 0;
      break;
    }
    case ClassKind::P: {
      each_window_part(c.s + 1, false, geometric);
      for (long k : c.V) power_factor(k, static_cast<unsigned long>(c.t()));
      break;  // the empty member keeps counts[0] = 1
    }
  }
  return {c, nmax, std::move(a)};
}

ScanReport inequality_scan(const ClassParams& a, const ClassParams& b, std::size_t nmax) {
  CountTable ta = count_series(a, nmax);
  CountTable tb = count_series(b, nmax);
  ScanReport r;
  r.a = a;
  r.b = b;
  r.nmax = nmax;
  r.signs.resize(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    const int c = cmp(ta.counts[n], tb.counts[n]);
    const char sign = c > 0 ? '+' : (c < 0 ? '-' : '0');
    r.signs[n] = sign;
    if (sign == '+') r.last_positive = n;
    if (sign == '-') r.last_negative = n;
    if (sign == '0') r.last_zero = n;
  }
  r.counts_a = std::move(ta.counts);
  r.counts_b = std::move(tb.counts);
  return r;
}

std::string to_csv(const CountTable& table) {
  std::string out = "n,count\n";
  for (std::size_t n = 0; n <= table.nmax; ++n) {
    out += std::to_string(n);
    out += ',';
    out += table.counts[n].get_str();
    out += '\n';
  }
  return out;
}

std::string to_json(const CountTable& table) {
  detail::json j;
  j["params"] = detail::params_to_json(table.params);
  j["nmax"] = table.nmax;
  detail::json counts = detail::json::array();
  for (const Int& v : table.counts) counts.push_back(v.get_str());
  j["counts"] = std::move(counts);
  return j.dump();
}

std::string to_csv(const ScanReport& report) {
  std::string out = "n,count_a,count_b,sign\n";
  for (std::size_t n = 0; n <= report.nmax; ++n) {
    out += std::to_string(n);
    out += ',';
    out += report.counts_a[n].get_str();
    out += ',';
    out += report.counts_b[n].get_str();
    out += ',';
    out += report.signs[n];
    out += '\n';
  }
  return out;
}

std::string to_json(const ScanReport& report) {
  detail::json j;
  j["a"] = detail::params_to_json(report.a);
  j["b"] = detail::params_to_json(report.b);
  j["nmax"] = report.nmax;
  j["signs"] = report.signs;
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? detail::json(*v) : detail::json(nullptr);
  };
  j["last_positive"] = opt(report.last_positive);
  j["last_negative"] = opt(report.last_negative);
  j["last_zero"] = opt(report.last_zero);
  return j.dump();
}

}  // namespace partineq
