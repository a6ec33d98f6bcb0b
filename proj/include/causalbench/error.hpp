#pragma once

#include <stdexcept>
#include <string>

namespace causalbench {

enum class ErrorCode {
    invalid_size,
    cycle_detected,
    no_valid_perturbation,
    unknown_node,
    config_error,
    incomplete_world,
    zero_evidence,
    non_binary,
    precondition,
    vocab_exhausted,
    template_missing,
    not_applicable,
    parse_error,
    schema_version_mismatch,
    missing_response,
    missing_prediction,
    empty_parse,
    io_error,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace causalbench
