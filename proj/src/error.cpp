#include "pww/error.hpp"

namespace pww {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::SelfLoop: return "SelfLoop";
  case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
  case ErrorCode::NotConnected: return "NotConnected";
  case ErrorCode::TrivialGraph: return "TrivialGraph";
  case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::MalformedGraph6: return "MalformedGraph6";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::InvalidParameter: return "InvalidParameter";
  case ErrorCode::InvalidCode: return "InvalidCode";
  case ErrorCode::NotATree: return "NotATree";
  case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

} // namespace pww
