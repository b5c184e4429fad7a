#include "polab/error.hpp"

namespace polab {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::NotEmbedding: return "NotEmbedding";
        case ErrorCode::NotCompleteLattice: return "NotCompleteLattice";
        case ErrorCode::NotCutStable: return "NotCutStable";
        case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
        case ErrorCode::CarrierMismatch: return "CarrierMismatch";
        case ErrorCode::NotGalois: return "NotGalois";
        case ErrorCode::NotOnePreorder: return "NotOnePreorder";
        case ErrorCode::NotZeroPreorder: return "NotZeroPreorder";
        case ErrorCode::NotDelta1: return "NotDelta1";
        case ErrorCode::NotCompletion: return "NotCompletion";
        case ErrorCode::PreservationViolation: return "PreservationViolation";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::ConditionOneFails: return "ConditionOneFails";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::PartialInverseUndefined: return "PartialInverseUndefined";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotMorphism: return "NotMorphism";
        case ErrorCode::NotGaloisStable: return "NotGaloisStable";
    }
    return "Unknown";
}

}  // namespace polab
