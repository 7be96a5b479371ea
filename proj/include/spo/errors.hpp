#pragma once

#include <stdexcept>
#include <string>

namespace spo {

// Every failure the library reports derives from Error so callers can catch
// the whole family at once; the concrete type names the failed contract.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SPO_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

SPO_DEFINE_ERROR(PreconditionViolation);
SPO_DEFINE_ERROR(TruncationOverflow);
SPO_DEFINE_ERROR(DivergentNormalization);
SPO_DEFINE_ERROR(CutoffTooSmall);
SPO_DEFINE_ERROR(ContourViolation);
SPO_DEFINE_ERROR(QuadratureNotConverged);
SPO_DEFINE_ERROR(CoefficientCacheMiss);
SPO_DEFINE_ERROR(TruncationInsufficient);
SPO_DEFINE_ERROR(DomainTooLarge);
SPO_DEFINE_ERROR(ConfigError);

#undef SPO_DEFINE_ERROR

} // namespace spo
