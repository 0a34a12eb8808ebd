#pragma once

#include <stdexcept>
#include <string>

namespace partineq {

// Failure categories surfaced by the library. The CLI maps Internal to
// exit code 2 and everything else to exit code 1.
enum class Errc {
  Domain,       // arguments violate a precondition
  Parse,        // malformed serialized input
  Membership,   // partition is not in the required class
  Unsupported,  // operation is not defined for these inputs
  Resource,     // a guard limit (enumeration size, range width) was exceeded
  NoSolution,   // a linear form has no admissible representation
  BoundNotMet,  // map prerequisite absent below the guaranteed weight range
  NotInRange,   // value is not in the image of a map
  Internal,     // broken internal invariant; indicates a bug
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Domain: return "domain";
    case Errc::Parse: return "parse";
    case Errc::Membership: return "membership";
    case Errc::Unsupported: return "unsupported";
    case Errc::Resource: return "resource";
    case Errc::NoSolution: return "no-solution";
    case Errc::BoundNotMet: return "bound-not-met";
    case Errc::NotInRange: return "not-in-range";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace partineq
