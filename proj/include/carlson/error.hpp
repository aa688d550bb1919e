#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carlson {

/// Failure categories shared by every module. Honest "not found within the
/// window / budget" outcomes are not errors: they come back as empty optionals
/// or dedicated result variants.
enum class Errc {
  UnknownSymbol,
  EmptyOperand,
  NotSeparated,
  OutOfWindow,
  EmptySet,
  ZeroInput,
  IndexOutOfRange,
  ParseError,
  WindowOverflow,
  NotWeaklyThin,
  PreconditionFailed,
  ScheduleGap,
  VerificationFailed,
  HashMismatch,
  MalformedCertificate,
  InvalidArgument,
  Overflow,
  AmbiguousLimit,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace carlson
