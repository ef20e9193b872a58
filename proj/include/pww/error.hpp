#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pww {

enum class ErrorCode {
  SelfLoop,
  VertexOutOfRange,
  NotConnected,
  TrivialGraph,
  EmptyVertexSet,
  SyntaxError,
  MalformedGraph6,
  TooLarge,
  InvalidParameter,
  InvalidCode,
  NotATree,
  Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  int line() const noexcept { return line_; }

private:
  ErrorCode code_;
  int line_;
};

} // namespace pww
