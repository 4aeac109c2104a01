#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homtwist {

enum class ErrorKind {
  MalformedRational,
  ZeroDenominator,
  DimensionMismatch,
  NotInvertible,
  NotMultiplicative,
  NotComultiplicative,
  NotInvolutive,
  NotCommutingWithAlpha,
  CommutationFailure,
  IntertwiningFailure,
  BraidViolation,
  YDViolation,
  PreconditionFailure,
  DegenerateQ,
  ParamConstraintViolation,
  SyntaxError,
  UnknownName,
  DuplicateName,
  WrongKind,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::DimensionMismatch, what);
}

}  // namespace homtwist
