#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gravab {

/// Machine-readable failure categories. The CLI prints code_name() verbatim.
enum class ErrorCode {
  invalid_input,
  unsupported_unit,
  overlap,
  duplicate_sphere,
  unsupported_configuration,
  not_stationary,
  no_stationary_point_found,
  no_saddle,
  optimization_failed,
  numerical_failure,
  protocol_mismatch,
  incomplete_baseline,
  unsupported_format,
  unknown_species,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::unsupported_unit: return "unsupported-unit";
    case ErrorCode::overlap: return "overlap";
    case ErrorCode::duplicate_sphere: return "duplicate-sphere";
    case ErrorCode::unsupported_configuration: return "unsupported-configuration";
    case ErrorCode::not_stationary: return "not-stationary";
    case ErrorCode::no_stationary_point_found: return "no-stationary-point-found";
    case ErrorCode::no_saddle: return "no-saddle";
    case ErrorCode::optimization_failed: return "optimization-failed";
    case ErrorCode::numerical_failure: return "numerical-failure";
    case ErrorCode::protocol_mismatch: return "protocol-mismatch";
    case ErrorCode::incomplete_baseline: return "incomplete-baseline";
    case ErrorCode::unsupported_format: return "unsupported-format";
    case ErrorCode::unknown_species: return "unknown-species";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gravab
