#include "parakernel/error.hpp"

namespace parakernel {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::UnknownAtom: return "unknown atom";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Resource: return "resource limit exceeded";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

namespace {
std::string located(std::size_t line, std::size_t column, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}
}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse, located(line, column, message)), line_(line), column_(column) {}

void throw_internal(const std::string& what) {
  throw Error(ErrorKind::Internal, "invariant violated: " + what);
}

}  // namespace parakernel
