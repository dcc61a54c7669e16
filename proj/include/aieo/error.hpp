#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aieo {

enum class ErrorCode {
    KindConflict,
    UndeclaredEntity,
    KindMismatch,
    ValidationError,
    SyntaxError,
    UnsupportedFeature,
    SchemaViolation,
    IterationLimitExceeded,
    UnknownFact,
    UnknownConcept,
    MissingArgument,
    DuplicateFramework,
    UnknownKind,
    UnknownFramework,
    UnknownAnnotationProperty,
    InsufficientFrameworks,
    UnconfirmedProposal,
    IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    std::string message;
    Severity severity = Severity::Error;

    std::string to_string() const;
};

// A failed parse. Always holds at least one error diagnostic.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::vector<ParseDiagnostic> diagnostics);

    const std::vector<ParseDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

// Converts a byte offset into a 1-based (line, column) pair.
std::pair<int, int> line_column_at(std::string_view text, std::size_t offset);

}  // namespace aieo
