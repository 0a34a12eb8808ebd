#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partineq/partition.hpp"

namespace partineq {

struct CountTable {
  ClassParams params;
  std::size_t nmax = 0;
  std::vector<Int> counts;  // counts[n] = number of class members of weight n
};

// Every class member of weight n, each exactly once, sorted canonically
// (lexicographic on the (part, frequency) sequence). Kind P is rejected:
// its members are not plain partitions. Guarded at 10^7 results.
std::vector<Partition> enumerate_class(const ClassParams& c, const Int& n);

// Weight-indexed member counts for n = 0..nmax via the class's product
// generating function: geometric factors for unrestricted parts, sparse
// power-frequency factors for distinguished parts.
CountTable count_series(const ClassParams& c, std::size_t nmax);

struct ScanReport {
  ClassParams a;
  ClassParams b;
  std::size_t nmax = 0;
  std::vector<Int> counts_a;
  std::vector<Int> counts_b;
  std::string signs;  // signs[n] in {'+','-','0'} encodes sgn(count_a - count_b)
  std::optional<std::size_t> last_positive;
  std::optional<std::size_t> last_negative;
  std::optional<std::size_t> last_zero;
};

// Pointwise comparison of two class counting sequences on [0, nmax].
ScanReport inequality_scan(const ClassParams& a, const ClassParams& b, std::size_t nmax);

// CSV with header "n,count".
std::string to_csv(const CountTable& table);
std::string to_json(const CountTable& table);

// CSV with header "n,count_a,count_b,sign".
std::string to_csv(const ScanReport& report);
std::string to_json(const ScanReport& report);

}  // namespace partineq
