#pragma once

#include <stdexcept>
#include <string>

namespace padicmeasure {

/// Broad failure classes. The CLI maps these onto exit codes.
enum class error_kind {
    precondition,  // caller supplied arguments outside an operation's domain
    consistency,   // an internal identity that must hold exactly did not
    stability,     // a two-level convergence check disagreed
};

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

#define PADICMEASURE_DEFINE_ERROR(name, kind_value)                        \
    class name : public error {                                            \
    public:                                                                \
        explicit name(const std::string& what)                             \
            : error(error_kind::kind_value, #name ": " + what) {}          \
    }

PADICMEASURE_DEFINE_ERROR(InvalidContext, precondition);
PADICMEASURE_DEFINE_ERROR(ContextMismatch, precondition);
PADICMEASURE_DEFINE_ERROR(DenominatorDivisibleByP, precondition);
PADICMEASURE_DEFINE_ERROR(NotAUnit, precondition);
PADICMEASURE_DEFINE_ERROR(NotDivisible, precondition);
PADICMEASURE_DEFINE_ERROR(BaseNotOneModP, precondition);
PADICMEASURE_DEFINE_ERROR(NotCoprime, precondition);
PADICMEASURE_DEFINE_ERROR(InvalidFractionClass, precondition);
PADICMEASURE_DEFINE_ERROR(BallIndexOutOfRange, precondition);
PADICMEASURE_DEFINE_ERROR(LevelExceedsMeasure, precondition);
PADICMEASURE_DEFINE_ERROR(ScalingIsRootOfUnity, precondition);
PADICMEASURE_DEFINE_ERROR(OrderTooSmall, precondition);
PADICMEASURE_DEFINE_ERROR(DenominatorVanishes, precondition);
PADICMEASURE_DEFINE_ERROR(NonzeroConstantTerm, consistency);
PADICMEASURE_DEFINE_ERROR(IdentityViolated, consistency);
PADICMEASURE_DEFINE_ERROR(StabilityCheckFailed, stability);

#undef PADICMEASURE_DEFINE_ERROR

}  // namespace padicmeasure
