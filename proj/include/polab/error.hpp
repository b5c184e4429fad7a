#pragma once

#include <stdexcept>
#include <string>

namespace polab {

enum class ErrorCode {
    AntisymmetryViolation,
    UnknownId,
    NotMonotone,
    NotEmbedding,
    NotCompleteLattice,
    NotCutStable,
    CarrierTooLarge,
    CarrierMismatch,
    NotGalois,
    NotOnePreorder,
    NotZeroPreorder,
    NotDelta1,
    NotCompletion,
    PreservationViolation,
    DomainMismatch,
    ConditionOneFails,
    PreconditionViolation,
    PartialInverseUndefined,
    InternalInvariant,
    ParseError,
    NotMorphism,
    NotGaloisStable,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Internal invariant check; a failure means a theorem-level claim broke.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorCode::InternalInvariant, what);
}

}  // namespace polab
