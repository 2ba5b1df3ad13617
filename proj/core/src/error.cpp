#include "cpsdlab/error.hpp"

namespace cpsdlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "invalid-input";
    case ErrorKind::CapExceeded:
      return "cap-exceeded";
    case ErrorKind::VerificationFailed:
      return "verification-failed";
    case ErrorKind::Numerical:
      return "numerical-error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cpsdlab
