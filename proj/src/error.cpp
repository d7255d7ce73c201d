#include "crosscheck/error.hpp"

namespace crosscheck {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateId: return "DuplicateId";
        case ErrorKind::EmptyAfterCleaning: return "EmptyAfterCleaning";
        case ErrorKind::EmptyWindow: return "EmptyWindow";
        case ErrorKind::EmptyVocabulary: return "EmptyVocabulary";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::DimInconsistent: return "DimInconsistent";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::SingleCluster: return "SingleCluster";
        case ErrorKind::ZeroTargetVector: return "ZeroTargetVector";
        case ErrorKind::NoRelevantStory: return "NoRelevantStory";
        case ErrorKind::EmptyReliableSet: return "EmptyReliableSet";
        case ErrorKind::EmptyStory: return "EmptyStory";
        case ErrorKind::EmptyNode: return "EmptyNode";
        case ErrorKind::SingleClassData: return "SingleClassData";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::LayoutMismatch: return "LayoutMismatch";
        case ErrorKind::SchemaVersionMismatch: return "SchemaVersionMismatch";
        case ErrorKind::NoVerifiableClaims: return "NoVerifiableClaims";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace crosscheck
