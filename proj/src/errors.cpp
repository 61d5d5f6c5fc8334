#include "burgers/errors.hpp"

namespace burgers {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::grid: return "grid";
    case ErrorKind::input: return "input";
    case ErrorKind::out_of_domain: return "out_of_domain";
    case ErrorKind::window_too_small: return "window_too_small";
    case ErrorKind::insufficient_data: return "insufficient_data";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace burgers
