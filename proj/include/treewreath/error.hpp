#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treewreath {

/// Failure categories. Every exception thrown by the library is an Error
/// carrying one of these, so callers (and the CLI) can report by name.
enum class ErrorKind {
  kMalformedPermutation,
  kDomain,
  kContainment,
  kNotSemiregular,
  kEqualGroups,
  kOrbitViolation,
  kCapability,
  kInvalidElement,
  kInvalidPortrait,
  kRadius,
  kPrecondition,
  kInvariant,
  kUnknownSuite,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace treewreath
