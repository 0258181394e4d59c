#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

enum class ErrorCode {
    InvalidArgument = 1,
    ContourHitsSingularity,
    NonIntegrableEndpoint,
    GammaPole,
    OutOfDisk,
    StepViolation,
    PathTooClose,
    AccuracyLoss,
    InvalidAnnulus,
    UnsupportedDepth,
    DomainError,
    UnsupportedDegenerate,
    UnknownExperiment,
    Io,
    Parse,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::ContourHitsSingularity: return "contour-hits-singularity";
        case ErrorCode::NonIntegrableEndpoint: return "non-integrable-endpoint";
        case ErrorCode::GammaPole: return "gamma-pole";
        case ErrorCode::OutOfDisk: return "out-of-disk";
        case ErrorCode::StepViolation: return "step-violation";
        case ErrorCode::PathTooClose: return "path-too-close";
        case ErrorCode::AccuracyLoss: return "accuracy-loss";
        case ErrorCode::InvalidAnnulus: return "invalid-annulus";
        case ErrorCode::UnsupportedDepth: return "unsupported-depth";
        case ErrorCode::DomainError: return "domain-error";
        case ErrorCode::UnsupportedDegenerate: return "unsupported-degenerate";
        case ErrorCode::UnknownExperiment: return "unknown-experiment";
        case ErrorCode::Io: return "io";
        case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace monodromy
