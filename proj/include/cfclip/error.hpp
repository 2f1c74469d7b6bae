#pragma once

#include <stdexcept>
#include <string>

namespace cfclip {

enum class ErrorCode {
    zero_vector,
    dimension_mismatch,
    bad_template,
    backend_failure,
    missing_backend,
    bad_dims,
    degenerate_homography,
    bad_fraction,
    non_finite_loss,
    missing_term,
    unknown_variant,
    corrupt_checkpoint,
    config_error,
    io_error,
};

// All library failures are reported through this type; `code()` identifies
// the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::zero_vector: return "ZeroVector";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::bad_template: return "BadTemplate";
        case ErrorCode::backend_failure: return "BackendFailure";
        case ErrorCode::missing_backend: return "MissingBackend";
        case ErrorCode::bad_dims: return "BadDims";
        case ErrorCode::degenerate_homography: return "DegenerateHomography";
        case ErrorCode::bad_fraction: return "BadFraction";
        case ErrorCode::non_finite_loss: return "NonFiniteLoss";
        case ErrorCode::missing_term: return "MissingTerm";
        case ErrorCode::unknown_variant: return "UnknownVariant";
        case ErrorCode::corrupt_checkpoint: return "CorruptCheckpoint";
        case ErrorCode::config_error: return "ConfigError";
        case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

} // namespace cfclip
