#pragma once

#include <stdexcept>
#include <string>

namespace lmss {

/// Failure categories surfaced by the library. Every throwing operation
/// documents which kinds it can raise.
enum class ErrorKind {
  unknown_vertex,
  unknown_edge,
  loop_rejected,
  duplicate_edge,
  invalid_cut_sides,
  too_large,
  not_a_matching,
  hypothesis_violated,
  disconnected,
  parse_error,
  empty_set,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::unknown_edge: return "UnknownEdge";
    case ErrorKind::loop_rejected: return "LoopRejected";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::invalid_cut_sides: return "InvalidCutSides";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::not_a_matching: return "NotAMatching";
    case ErrorKind::hypothesis_violated: return "HypothesisViolated";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::empty_set: return "EmptySet";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace lmss
