#ifndef PARAKERNEL_ERROR_HPP
#define PARAKERNEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parakernel {

enum class ErrorKind {
  Parse,         // malformed input text
  Validation,    // well-formedness violated (duplicate definition, loose atom)
  UnknownAtom,   // atom not in the universe of the value it is used with
  Precondition,  // operation called outside its domain
  Resource,      // a configured size cap was exceeded
  Unsupported,   // operation not defined for this kind of input
  Internal       // an asserted invariant failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based position; line 0 means "whole document".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void throw_internal(const std::string& what);

}  // namespace parakernel

#endif
