#pragma once

#include <stdexcept>
#include <string>

namespace corr13 {

enum class ErrorCode {
    NotPrime = 1,
    PNotOneModThree,
    IOutOfRange,
    GModThreeIsTwo,
    FieldTooLarge,
    LogOfZero,
    GcdNotOne,
    ZeroCoefficient,
    NonIntegralFrequency,
    NonIntegralCount,
    NonIntegralWeight,
    NoPartitionFound,
    FieldTooLargeForOracle,
    BadArgument,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PNotOneModThree: return "PNotOneModThree";
    case ErrorCode::IOutOfRange: return "IOutOfRange";
    case ErrorCode::GModThreeIsTwo: return "GModThreeIsTwo";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::NonIntegralFrequency: return "NonIntegralFrequency";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::NoPartitionFound: return "NoPartitionFound";
    case ErrorCode::FieldTooLargeForOracle: return "FieldTooLargeForOracle";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace corr13
