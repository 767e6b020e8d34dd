#pragma once

#include <stdexcept>
#include <string>

namespace quotkit {

enum class ErrorCode {
  ok = 0,
  non_expandable,
  rank_mismatch,
  not_divisible,
  out_of_range,
  degenerate_weights,
  non_collapse,
  bad_config,
  unknown_check,
  parse_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this type; the code survives the
// trip through the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quotkit
