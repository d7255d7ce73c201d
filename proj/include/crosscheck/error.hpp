#pragma once

#include <stdexcept>
#include <string>

namespace crosscheck {

enum class ErrorKind {
    IoError,
    ParseError,
    DuplicateId,
    EmptyAfterCleaning,
    EmptyWindow,
    EmptyVocabulary,
    DimMismatch,
    DimInconsistent,
    TooFewPoints,
    SingleCluster,
    ZeroTargetVector,
    NoRelevantStory,
    EmptyReliableSet,
    EmptyStory,
    EmptyNode,
    SingleClassData,
    ShapeMismatch,
    LayoutMismatch,
    SchemaVersionMismatch,
    NoVerifiableClaims,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace crosscheck
