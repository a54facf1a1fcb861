#pragma once

#include <stdexcept>
#include <string>

namespace mga {

enum class Err {
  BadParameters,
  NonMonicReducer,
  ZeroInput,
  OutOfRange,
  DimensionMismatch,
  NotASubmodule,
  TooLarge,
  NotAbelian,
  NotNormal,
  AlgebraMismatch,
  RingMismatch,
  RangeExceeded,
  CharMismatch,
  DepthExceeded,
  RingUnsuitable,
  ParseError,
  ValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace mga
