#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlines {

enum class ErrorKind {
  invalid_pair,
  invalid_vertex,
  invalid_hedge,
  invalid_argument,
  invalid_size,
  invalid_metric,
  not_connected,
  zero_distance,
  invalid_f,
  precondition,
  out_of_range,
  unsupported_size,
  invalid_epsilon,
  internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::invalid_vertex: return "invalid-vertex";
    case ErrorKind::invalid_hedge: return "invalid-hedge";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_size: return "invalid-size";
    case ErrorKind::invalid_metric: return "invalid-metric";
    case ErrorKind::not_connected: return "not-connected";
    case ErrorKind::zero_distance: return "zero-distance";
    case ErrorKind::invalid_f: return "invalid-f";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::unsupported_size: return "unsupported-size";
    case ErrorKind::invalid_epsilon: return "invalid-epsilon";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperlines
