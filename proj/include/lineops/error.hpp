#pragma once

#include <stdexcept>
#include <string>

namespace lineops {

enum class ErrorKind {
  InvalidField,
  FieldMismatch,
  DivisionByZero,
  Parse,
  Degenerate,
  DegenerateParameter,
  ProfileMismatch,
  OutOfRange,
  NotApplicable,
  NoRealRoot,
  Unrealizable,
};

const char* error_kind_name(ErrorKind k);

// Every domain failure in the library is one of these.  The CLI prints
// "error: <kind>: <message>" and exits 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace lineops
