#pragma once

#include <stdexcept>
#include <string>

namespace henon {

enum class ErrorCode {
  invalid_argument,
  escaped_numeric,
  unsupported_kind,
  green_indeterminate,
  degenerate,
  all_escaped,
  nonconvergent_cluster,
  not_minimal,
  ambiguous_capture,
  rate_unresolved,
  series_stall,
  empty_set,
  config_error,
};

const char* to_string(ErrorCode code);

// Every library failure is a LabError; the code decides the CLI exit status.
class LabError : public std::runtime_error {
 public:
  LabError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace henon
