#include "treewreath/error.hpp"

namespace treewreath {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedPermutation: return "malformed-permutation";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kContainment: return "containment";
    case ErrorKind::kNotSemiregular: return "not-semiregular";
    case ErrorKind::kEqualGroups: return "equal-groups";
    case ErrorKind::kOrbitViolation: return "orbit-violation";
    case ErrorKind::kCapability: return "capability";
    case ErrorKind::kInvalidElement: return "invalid-element";
    case ErrorKind::kInvalidPortrait: return "invalid-portrait";
    case ErrorKind::kRadius: return "radius";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kInvariant: return "invariant";
    case ErrorKind::kUnknownSuite: return "unknown-suite";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace treewreath
