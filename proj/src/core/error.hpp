#pragma once

#include <stdexcept>
#include <string>

namespace mtv {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kBoundMismatch,
  kNotInvertible,
  kDivergent,
  kToleranceUnreachable,
  kUnknownCheck,
  kIo,
};

// Single exception type for the core; the C API maps `kind()` onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mtv
