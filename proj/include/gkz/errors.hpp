#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

enum class ErrorCode {
    InvalidMatrix,
    CodimensionMismatch,
    ConeNotPointed,
    ConeNotFullDimensional,
    NotGenericWeight,
    NonRationalInput,
    ExponentMinusOne,
    ExponentInteger,
    IntegerPerturbation,
    LogTermsPresent,
    EmptySeries,
    NotMinimalNegativeSupport,
    NotHomogeneous,
    DegreeCapExceeded,
    InconsistentSystem,
    PoleHit,
    NotInSymmetricAlgebra,
    InvalidArgument,
};

const char* error_name(ErrorCode code);

/// Domain error raised by every module. The code is machine readable and
/// is what the CLI reports in its error object.
class GkzError : public std::runtime_error {
public:
    GkzError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::CodimensionMismatch: return "CodimensionMismatch";
    case ErrorCode::ConeNotPointed: return "ConeNotPointed";
    case ErrorCode::ConeNotFullDimensional: return "ConeNotFullDimensional";
    case ErrorCode::NotGenericWeight: return "NotGenericWeight";
    case ErrorCode::NonRationalInput: return "NonRationalInput";
    case ErrorCode::ExponentMinusOne: return "ExponentMinusOne";
    case ErrorCode::ExponentInteger: return "ExponentInteger";
    case ErrorCode::IntegerPerturbation: return "IntegerPerturbation";
    case ErrorCode::LogTermsPresent: return "LogTermsPresent";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::NotMinimalNegativeSupport: return "NotMinimalNegativeSupport";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::NotInSymmetricAlgebra: return "NotInSymmetricAlgebra";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace gkz
