#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burgers {

enum class ErrorKind {
  parameter,
  grid,
  input,
  out_of_domain,
  window_too_small,
  insufficient_data,
  config,
  io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace burgers
