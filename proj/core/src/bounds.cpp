#include "partineq/bounds.hpp"

namespace partineq {
namespace bounds {

namespace {

void require_positive(long v, const char* name) {
  if (v < 1) raise(Errc::Domain, std::string(name) + " must be positive");
}

}  // namespace

Int t1_bound(long L, long s) {
  require_positive(L, "L");
  require_positive(s, "s");
  Int w = Int(L) + s;
  return 2 * ipow(w, 7) + ipow(w, 5);
}

Int t3_bound(long s, long t) {
  require_positive(s, "s");
  require_positive(t, "t");
  return ipow(10 * Int(s), 5) * ipow(Int(t) + 1, 4) *
         ipow(39 * Int(s) * s * t * t * t, 5 * static_cast<unsigned long>(t));
}

Int B_st(long s, long t) {
  require_positive(s, "s");
  require_positive(t, "t");
  return ipow(39 * Int(s) * s * t * t * t, static_cast<unsigned long>(t));
}

Int A_st(long s, long t) {
  require_positive(s, "s");
  require_positive(t, "t");
  return ipow(12 * Int(s) * t * t * t, static_cast<unsigned long>(t));
}

Int F_st(long s, long t) {
  return 156 * Int(s) * s * (Int(t) + 1) * (Int(t) + 1) * B_st(s, t);
}

Int F_s(long s) {
  require_positive(s, "s");
  return (10 * Int(s) - 2) * (15 * Int(s) - 3) + 8 * s;
}

Int kappa_s(long s) {
  Int f = F_s(s);
  // sum_{i=s+1}^{f-1} i = f(f-1)/2 - s(s+1)/2
  Int range_sum = f * (f - 1) / 2 - Int(s) * (s + 1) / 2;
  return (12 * Int(s) - 1) * range_sum + 1;
}

Rat alt_kt_bound(long s, long t) {
  require_positive(s, "s");
  require_positive(t, "t");
  Int num = (ipow(Int(2), static_cast<unsigned long>(t) + 4) * s + Int(s) * s) *
            ipow(Int(t), static_cast<unsigned long>(t));
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t));
  Rat r(num, fact);
  r.canonicalize();
  return r;
}

std::string evaluate(const std::string& name, const std::vector<long>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      raise(Errc::Domain, name + " expects " + std::to_string(n) + " argument(s)");
  };
  if (name == "t1_bound") {
    need(2);
    return t1_bound(args[0], args[1]).get_str();
  }
  if (name == "t3_bound") {
    need(2);
    return t3_bound(args[0], args[1]).get_str();
  }
  if (name == "F_st") {
    need(2);
    return F_st(args[0], args[1]).get_str();
  }
  if (name == "F_s") {
    need(1);
    return F_s(args[0]).get_str();
  }
  if (name == "kappa_s") {
    need(1);
    return kappa_s(args[0]).get_str();
  }
  if (name == "A") {
    need(2);
    return A_st(args[0], args[1]).get_str();
  }
  if (name == "B") {
    need(2);
    return B_st(args[0], args[1]).get_str();
  }
  if (name == "alt_kt_bound") {
    need(2);
    Rat r = alt_kt_bound(args[0], args[1]);
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();  // "p/q"
  }
  raise(Errc::Domain, "unknown bound name: " + name);
}

}  // namespace bounds
}  // namespace partineq
