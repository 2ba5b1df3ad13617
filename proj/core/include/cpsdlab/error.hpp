#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpsdlab {

enum class ErrorKind {
  InvalidInput,
  CapExceeded,
  VerificationFailed,
  Numerical,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this exception; the kind maps
// one-to-one onto the CLI status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidInput, what);
}

}  // namespace cpsdlab
