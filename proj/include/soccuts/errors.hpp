#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soccuts {

enum class ErrorKind {
  kMalformedInput,
  kDomain,
  kDegenerate,
  kUnsupported,
  kProjectionInvalid,
  kDegenerateAggregation,
  kHypothesisViolation,
  kNotSeparable,
  kInvalidInequality,
  kNotAFace,
  kNotEmpty,
  kInternalInconsistency,
};

std::string_view ToString(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace soccuts
