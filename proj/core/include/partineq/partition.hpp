#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partineq/bigint.hpp"

namespace partineq {

// Finite multiset of positive integer parts, stored as part -> frequency
// with every stored frequency positive. Frequencies are arbitrary-precision.
class Partition {
public:
  Partition() = default;

  // Builds from (part, frequency) pairs; rejects nonpositive parts or
  // frequencies and duplicate parts.
  static Partition from_pairs(const std::vector<std::pair<Int, Int>>& pairs);

  const std::map<Int, Int>& parts() const { return parts_; }

  // Frequency of a part; zero when absent.
  Int freq(const Int& part) const;

  // Sets a frequency outright; zero erases the part.
  void set_freq(const Int& part, const Int& f);

  // Adds delta to a frequency; the result must stay nonnegative.
  void add(const Int& part, const Int& delta);

  bool empty() const { return parts_.empty(); }

  // Sum of part * frequency over all parts.
  Int weight() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  // Lexicographic on the (part, frequency) sequence; used for canonical output order.
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
  std::map<Int, Int> parts_;
};

inline Int weight(const Partition& p) { return p.weight(); }

enum class ClassKind { I, D, DV, E, P, S };

const char* to_string(ClassKind k);
ClassKind class_kind_from_string(const std::string& s);

// Parameters shared by all partition classes: parts live in a window of
// length L above s, and V marks the distinguished parts inside that window.
struct ClassParams {
  long L = 1;
  long s = 1;
  std::vector<long> V;  // strictly ascending, each in [s+1, L+s]
  ClassKind kind = ClassKind::I;

  long t() const { return static_cast<long>(V.size()); }
  bool in_v(const Int& x) const;
  std::vector<long> v_desc() const;

  // Throws Errc::Domain when a field constraint is violated
  // (positivity, V window/sortedness, per-kind arity of V).
  void validate() const;

  bool operator==(const ClassParams& other) const = default;
};

// Class membership test. Kind P has no membership predicate here
// (its members carry coloring data the plain Partition does not).
bool is_member(const Partition& p, const ClassParams& c);

// JSON array of [part, frequency] decimal-string pairs, parts ascending,
// e.g. [["2","5"],["3","681"]].
std::string serialize(const Partition& p);
Partition parse_partition(const std::string& text);

// JSON object {"L":..,"s":..,"V":[..],"kind":".."}.
std::string to_json(const ClassParams& c);
ClassParams class_params_from_json(const std::string& text);

}  // namespace partineq
