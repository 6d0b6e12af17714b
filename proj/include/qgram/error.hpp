#pragma once

#include <stdexcept>
#include <string>

namespace qgram {

/*
 * Failure categories raised by the library.  Each names one diagnosable
 * misuse; the CLI prints the enum name verbatim in front of the message.
 */
enum class Err {
  NegativePowerOfNonMonomial,
  NotInvertible,
  UnknownMaster,
  OrderMismatch,
  NonUnitConstantTerm,
  EmptyOrder,
  UnknownName,
  UnknownId,
  NoLawRecorded,
  BoundExceeded,
  NotFullPermutation,
  SyntaxError,
  SemanticError,
  SchemaError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qgram
