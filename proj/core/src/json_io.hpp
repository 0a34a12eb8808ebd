#pragma once

// Internal helpers shared by the .cpp files; nlohmann/json stays out of the
// public headers so installed consumers only need GMP.

#include <json.hpp>

#include <string>

#include "partineq/errors.hpp"
#include "partineq/partition.hpp"

namespace partineq::detail {

using nlohmann::json;

inline json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::Parse, std::string(what) + ": malformed JSON");
  return j;
}

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json params_to_json(const ClassParams& c);
ClassParams params_from_json(const json& j);

}  // namespace partineq::detail
