#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccdim {

enum class ErrorKind {
  DuplicateLabel,
  UnknownEndpoint,
  SelfLoop,
  EmptyGraph,
  GraphTooLarge,
  EmptySelection,
  UnknownVertex,
  NotConnected,
  BudgetExceeded,
  UnknownFamily,
  BadParams,
  ParseError,
  UnsupportedDotFeature,
};

std::string_view to_string(ErrorKind kind);

inline std::ostream& operator<<(std::ostream& os, ErrorKind kind) { return os << to_string(kind); }

// Every failure in the library carries a kind so callers can map it to an
// exit code or a structured report without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ccdim
