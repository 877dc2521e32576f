#ifndef AGFLAG_ERROR_HPP
#define AGFLAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace agflag {

enum class Errc {
  DivisionByZero,
  SpecMismatch,
  ZeroInput,
  GcdViolation,
  DegreeRange,
  NotSeparable,
  KummerConditionFailed,
  RangeError,
  NotGaloisInvariant,
  PoleAtEvaluationPoint,
  SupportOverlap,
  TooLarge,
  PreconditionViolated,
  NotIsoDualFlag,
  CardinalityMismatch,
  ArityMismatch,
  InternalDisagreement,
  ConfigError,
};

/// All library failures carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace agflag

#endif
