#include "partineq/partition.hpp"

#include <algorithm>

#include "json_io.hpp"

namespace partineq {

Partition Partition::from_pairs(const std::vector<std::pair<Int, Int>>& pairs) {
  Partition p;
  for (const auto& [part, f] : pairs) {
    if (part < 1) raise(Errc::Parse, "part must be positive, got " + part.get_str());
    if (f < 1) raise(Errc::Parse, "frequency must be positive, got " + f.get_str());
    auto [it, inserted] = p.parts_.emplace(part, f);
    if (!inserted) raise(Errc::Parse, "duplicate part " + part.get_str());
  }
  return p;
}

Int Partition::freq(const Int& part) const {
  auto it = parts_.find(part);
  return it == parts_.end() ? Int(0) : it->second;
}

void Partition::set_freq(const Int& part, const Int& f) {
  if (part < 1) raise(Errc::Internal, "set_freq: nonpositive part");
  if (f < 0) raise(Errc::Internal, "set_freq: negative frequency");
  if (f == 0)
    parts_.erase(part);
  else
    parts_[part] = f;
}

void Partition::add(const Int& part, const Int& delta) {
  set_freq(part, freq(part) + delta);
}

Int Partition::weight() const {
  Int w = 0;
  for (const auto& [part, f] : parts_) w += part * f;
  return w;
}

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::I: return "I";
    case ClassKind::D: return "D";
    case ClassKind::DV: return "DV";
    case ClassKind::E: return "E";
    case ClassKind::P: return "P";
    case ClassKind::S: return "S";
  }
  raise(Errc::Internal, "unknown class kind");
}

ClassKind class_kind_from_string(const std::string& s) {
  if (s == "I") return ClassKind::I;
  if (s == "D") return ClassKind::D;
  if (s == "DV") return ClassKind::DV;
  if (s == "E") return ClassKind::E;
  if (s == "P") return ClassKind::P;
  if (s == "S") return ClassKind::S;
  raise(Errc::Parse, "unknown class kind: " + s);
}

bool ClassParams::in_v(const Int& x) const {
  if (x < 1 || !x.fits_slong_p()) return false;
  long v = x.get_si();
  return std::binary_search(V.begin(), V.end(), v);
}

std::vector<long> ClassParams::v_desc() const {
  std::vector<long> r(V.rbegin(), V.rend());
  return r;
}

void ClassParams::validate() const {
  if (L < 1) raise(Errc::Domain, "L must be positive");
  if (s < 1) raise(Errc::Domain, "s must be positive");
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (V[i] < s + 1 || V[i] > L + s)
      raise(Errc::Domain, "V entries must lie in [s+1, L+s]");
    if (i > 0 && V[i - 1] >= V[i])
      raise(Errc::Domain, "V must be strictly ascending");
  }
  switch (kind) {
    case ClassKind::DV:
    case ClassKind::P:
      if (V.empty()) raise(Errc::Domain, "kind requires a nonempty V");
      break;
    case ClassKind::E:
      if (V.size() < 2) raise(Errc::Domain, "kind E requires |V| >= 2");
      break;
    default:
      break;
  }
}

namespace {

// True when f is i^e for some integer i >= 0.
bool freq_is_power(const Int& f, unsigned long e) {
  if (e == 1) return true;
  Int root;
  return perfect_root(f, e, root);
}

}  // namespace

bool is_member(const Partition& p, const ClassParams& c) {
  c.validate();
  const Int lo_strict = c.s + 1;  // smallest part allowed in D-style classes
  const Int hi = c.L + c.s;
  switch (c.kind) {
    case ClassKind::I: {
      if (p.freq(c.s) < 1) return false;
      for (const auto& [part, f] : p.parts()) {
        if (part < c.s || part > hi) return false;
        if (c.in_v(part)) return false;
      }
      return true;
    }
    case ClassKind::S: {
      if (p.freq(c.s) < 1) return false;
      for (const auto& [part, f] : p.parts())
        if (part < c.s || part > hi) return false;
      return true;
    }
    case ClassKind::D: {
      if (p.empty()) return false;
      for (const auto& [part, f] : p.parts())
        if (part < lo_strict || part > hi) return false;
      return true;
    }
    case ClassKind::DV:
    case ClassKind::E: {
      if (p.empty()) return false;
      for (const auto& [part, f] : p.parts())
        if (part < lo_strict || part > hi) return false;
      const unsigned long e = static_cast<unsigned long>(
          c.kind == ClassKind::DV ? c.t() : c.t() - 1);
      for (long k : c.V)
        if (!freq_is_power(p.freq(Int(k)), e)) return false;
      return true;
    }
    case ClassKind::P:
      raise(Errc::Unsupported,
            "kind P members carry coloring data; no membership test on plain partitions");
  }
  raise(Errc::Internal, "unknown class kind");
}

std::string serialize(const Partition& p) {
  return detail::partition_to_json(p).dump();
}

Partition parse_partition(const std::string& text) {
  return detail::partition_from_json(detail::parse_json(text, "partition"));
}

std::string to_json(const ClassParams& c) {
  return detail::params_to_json(c).dump();
}

ClassParams class_params_from_json(const std::string& text) {
  return detail::params_from_json(detail::parse_json(text, "class params"));
}

namespace detail {

json partition_to_json(const Partition& p) {
  json arr = json::array();
  for (const auto& [part, f] : p.parts())
    arr.push_back(json::array({part.get_str(), f.get_str()}));
  return arr;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::Parse, "partition: expected a JSON array");
  std::vector<std::pair<Int, Int>> pairs;
  pairs.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      raise(Errc::Parse, "partition: each entry must be a [part, frequency] string pair");
    pairs.emplace_back(parse_int(e[0].get<std::string>()),
                       parse_int(e[1].get<std::string>()));
  }
  return Partition::from_pairs(pairs);
}

json params_to_json(const ClassParams& c) {
  return json{{"L", c.L}, {"s", c.s}, {"V", c.V}, {"kind", to_string(c.kind)}};
}

ClassParams params_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::Parse, "class params: expected a JSON object");
  for (const char* key : {"L", "s", "V", "kind"})
    if (!j.contains(key))
      raise(Errc::Parse, std::string("class params: missing field ") + key);
  if (!j["L"].is_number_integer() || !j["s"].is_number_integer() ||
      !j["V"].is_array() || !j["kind"].is_string())
    raise(Errc::Parse, "class params: wrong field types");
  ClassParams c;
  c.L = j["L"].get<long>();
  c.s = j["s"].get<long>();
  for (const auto& v : j["V"]) {
    if (!v.is_number_integer()) raise(Errc::Parse, "class params: V entries must be integers");
    c.V.push_back(v.get<long>());
  }
  c.kind = class_kind_from_string(j["kind"].get<std::string>());
  c.validate();
  return c;
}

}  // namespace detail

}  // namespace partineq
