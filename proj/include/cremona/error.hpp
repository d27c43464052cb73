#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

enum class ErrorKind {
  DimensionMismatch,
  ArityMismatch,
  IndexOutOfRange,
  DivisionByZero,
  BoundExceeded,
  NotInKernelRing,
  NotInKerEKerD,
  NotMonomialInK,
  NotInCentralizer,
  MalformedCentralizerElement,
  InvalidGenerator,
  ParseError,
  UnknownVariable,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// front ends can map categories onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, std::size_t line,
             std::size_t column)
      : Error(kind, what + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cremona
