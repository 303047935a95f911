#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mm {

enum class ErrorCategory { Parse, Precondition, Resource, Internal };

inline const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Precondition: return "precondition";
    case ErrorCategory::Resource: return "resource";
    case ErrorCategory::Internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCategory::Parse, std::to_string(line) + ":" +
                                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void throw_precondition(const std::string& m) {
  throw Error(ErrorCategory::Precondition, m);
}
[[noreturn]] inline void throw_resource(const std::string& m) {
  throw Error(ErrorCategory::Resource, m);
}
[[noreturn]] inline void throw_internal(const std::string& m) {
  throw Error(ErrorCategory::Internal, m);
}

}  // namespace mm
