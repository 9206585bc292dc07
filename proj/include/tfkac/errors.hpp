#pragma once

#include <stdexcept>
#include <string>

namespace tfkac {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TFKAC_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

TFKAC_DEFINE_ERROR(GammaOutOfRange);
TFKAC_DEFINE_ERROR(NegativeTempering);
TFKAC_DEFINE_ERROR(NonpositiveDiffusion);
TFKAC_DEFINE_ERROR(NegativePotential);
TFKAC_DEFINE_ERROR(ReParameterNegative);
TFKAC_DEFINE_ERROR(BadPartition);
TFKAC_DEFINE_ERROR(OrderTooLarge);
TFKAC_DEFINE_ERROR(RuleMismatch);
TFKAC_DEFINE_ERROR(HistoryTooShort);
TFKAC_DEFINE_ERROR(CoefficientTableTooShort);
TFKAC_DEFINE_ERROR(SingularPivot);
TFKAC_DEFINE_ERROR(SingularMatrix);
TFKAC_DEFINE_ERROR(IncompatibleData);
TFKAC_DEFINE_ERROR(GridMismatch);
TFKAC_DEFINE_ERROR(EvaluatorFailure);
TFKAC_DEFINE_ERROR(ConfigOverflow);
TFKAC_DEFINE_ERROR(ToleranceNotMet);
TFKAC_DEFINE_ERROR(BadConfig);
TFKAC_DEFINE_ERROR(IoFailure);

#undef TFKAC_DEFINE_ERROR

} // namespace tfkac
