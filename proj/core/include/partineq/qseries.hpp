#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partineq/bigint.hpp"

namespace partineq {

// Power series in q truncated at degree nmax, with exact integer coefficients.
class Series {
public:
  Series() = default;
  explicit Series(std::size_t nmax) : coeff_(nmax + 1) {}

  static Series one(std::size_t nmax) {
    Series r(nmax);
    r.coeff_[0] = 1;
    return r;
  }

  std::size_t nmax() const { return coeff_.empty() ? 0 : coeff_.size() - 1; }
  const std::vector<Int>& coeff() const { return coeff_; }
  Int& operator[](std::size_t n) { return coeff_[n]; }
  const Int& operator[](std::size_t n) const { return coeff_[n]; }

  std::size_t nonzero_count() const;

  bool operator==(const Series&) const = default;

private:
  std::vector<Int> coeff_;
};

// Truncated product; iterates the sparser operand's nonzero coefficients,
// so products with few-term factors cost O(terms * nmax).
Series mul(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

// 1 / ((q^a; q)_terms) = 1 / prod_{j=0}^{terms-1} (1 - q^(a+j)), a >= 1.
Series inv_pochhammer(long a, long terms, std::size_t nmax);

// sum_{i >= 0} q^(k * i^t), k >= 1, t >= 1.
Series power_freq_series(long k, long t, std::size_t nmax);

// The three window comparison series over parts s..L+s with marked set V
// (strictly ascending, inside [s+1, L+s]); t = |V|.
//
//   h:  q^s * prod_{k in V} (1 - q^k) / (q^s; q)_{L+1}
//        - [ 1/(q^(s+1); q)_L - 1 ]
//   h': q^s * prod_{k in V} (1 - q^k) / (q^s; q)_{L+1}
//        - prod_{k in V} [(1 - q^k) * sum_i q^(k i^t)] / (q^(s+1); q)_L
//   h'': q^s / (q^s; q)_{L+1}
//        - prod_{k in V} [sum_i q^(k i^t)] / (q^(s+1); q)_L
Series h_series(long L, long s, const std::vector<long>& V, std::size_t nmax);
Series hprime_series(long L, long s, const std::vector<long>& V, std::size_t nmax);
Series hdoubleprime_series(long L, long s, const std::vector<long>& V,
                           std::size_t nmax);

struct SignReport {
  std::size_t nmax = 0;
  std::optional<std::size_t> last_negative;
  std::optional<std::size_t> last_positive;
  char terminal_sign = '0';         // sign class of the final run: '+', '-' or '0'
  std::size_t terminal_start = 0;   // first index of the final run
};

// Locates the last negative and last positive coefficient and the terminal
// run: the longest suffix whose nonzero coefficients all share one sign
// (an all-zero suffix reports '0').
SignReport sign_scan(const Series& f);

// CSV with header "n,coeff".
std::string to_csv(const Series& f);
std::string to_json(const SignReport& r);

}  // namespace partineq
