#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

enum class Errc {
  kParse,
  kAlphabetMismatch,
  kDimensionMismatch,
  kSingularMatrix,
  kDegreeCap,
  kNotHomogeneous,
  kPositiveDimensional,
  kInvalidArgument,
  kInvalidSpec,
  kInconsistentSystem,
  kZeroDivisor,
  kCertificate,
  kUnsupported,
  kForbiddenPoint,
  kRouteMismatch,
  kRetryExhausted,
};

const char* to_string(Errc code);

/// Every failure raised by the library. `code()` lets callers (the CLI in
/// particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apolar
