#include "crosscount/error.hpp"

namespace crosscount {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::CoordinateOverflow: return "CoordinateOverflow";
        case ErrorKind::PerturbationFailed: return "PerturbationFailed";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::GeneralPositionViolation: return "GeneralPositionViolation";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::NotConvexPosition: return "NotConvexPosition";
        case ErrorKind::EmbeddingFailed: return "EmbeddingFailed";
        case ErrorKind::InvalidLayering: return "InvalidLayering";
    }
    return "UnknownError";
}

}  // namespace crosscount
