#pragma once

#include <stdexcept>
#include <string>

namespace sk {

enum class ErrorKind {
  EdgeDegree,
  MultiComponent,
  NonPlanar,
  BadOrientation,
  InvalidGauss,
  NotPermutation,
  CrossingArches,
  MalformedCode,
  BudgetExceeded,
  Overflow,
  Io,
  Parse,
  InvalidPd,
  NotAKnot,
  DomainError,
  RegionInvalid,
  NotAlternating,
  SpecInvalid,
  NonPrime,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sk
