#pragma once

#include <stdexcept>
#include <string>

namespace bfun {

/// Base class of every failure raised by the library. `code()` is a stable
/// machine-readable identifier used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define BFUN_DEFINE_ERROR(Name, Code)                                  \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(Code, what) {}      \
  };

BFUN_DEFINE_ERROR(AlgebraMismatch, "AlgebraMismatch")
BFUN_DEFINE_ERROR(InvalidArgument, "InvalidArgument")
BFUN_DEFINE_ERROR(NoncommutativeSupport, "NoncommutativeSupport")
BFUN_DEFINE_ERROR(NonGlobalOrdering, "NonGlobalOrdering")
BFUN_DEFINE_ERROR(NoAdmissibleEliminationOrdering, "NoAdmissibleEliminationOrdering")
BFUN_DEFINE_ERROR(CapExceeded, "CapExceeded")
BFUN_DEFINE_ERROR(ProvablyZero, "ProvablyZero")
BFUN_DEFINE_ERROR(NotHolonomic, "NotHolonomic")
BFUN_DEFINE_ERROR(NotZeroDimensional, "NotZeroDimensional")
BFUN_DEFINE_ERROR(UnitIdeal, "UnitIdeal")
BFUN_DEFINE_ERROR(UnknownVariable, "UnknownVariable")
BFUN_DEFINE_ERROR(UnsupportedGenerator, "UnsupportedGenerator")
BFUN_DEFINE_ERROR(ExponentOverflow, "ExponentOverflow")

#undef BFUN_DEFINE_ERROR

class NondegeneracyViolated : public Error {
 public:
  NondegeneracyViolated(int i, int j, int k, const std::string& what)
      : Error("NondegeneracyViolated", what), i(i), j(j), k(k) {}
  int i, j, k;
};

class OrderingInadmissible : public Error {
 public:
  OrderingInadmissible(int i, int j, const std::string& what)
      : Error("OrderingInadmissible", what), i(i), j(j) {}
  int i, j;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, const std::string& what)
      : Error("SyntaxError", what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace bfun
