#pragma once

#include <stdexcept>
#include <string>

namespace sharedcache {

// All simulator failures derive from SimError so callers can catch one type
// at the CLI boundary while tests match the specific condition.
struct SimError : std::runtime_error {
    explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParamsInvalid : SimError {
    using SimError::SimError;
};
struct NonIntegralCacheQuota : SimError {
    using SimError::SimError;
};
struct FractionNotRealizable : SimError {
    using SimError::SimError;
};
struct NotAPartition : SimError {
    using SimError::SimError;
};
struct RoundOutOfRange : SimError {
    using SimError::SimError;
};
struct NonDistinctDemand : SimError {
    using SimError::SimError;
};
struct ParamsMismatch : SimError {
    using SimError::SimError;
};
// Raised when a receiver cannot reconstruct a wanted subfile. In a valid run
// this never fires; it signals a scheme bug, not a recoverable condition.
struct UndecodableSubfile : SimError {
    using SimError::SimError;
};
struct ArrivalAlreadyPopular : SimError {
    using SimError::SimError;
};
struct DemandOutsidePopularSet : SimError {
    using SimError::SimError;
};
struct QuotaNonIntegral : SimError {
    using SimError::SimError;
};
struct ZeroMemory : SimError {
    using SimError::SimError;
};
struct IdentityViolated : SimError {
    using SimError::SimError;
};
struct TooLarge : SimError {
    using SimError::SimError;
};
struct CertificateFailed : SimError {
    using SimError::SimError;
};
struct UnknownCodeParameters : SimError {
    using SimError::SimError;
};
struct DimensionMismatch : SimError {
    using SimError::SimError;
};
struct TooManyErrors : SimError {
    using SimError::SimError;
};
struct UncorrectableSyndrome : SimError {
    using SimError::SimError;
};
struct ConfigError : SimError {
    using SimError::SimError;
};

}  // namespace sharedcache
