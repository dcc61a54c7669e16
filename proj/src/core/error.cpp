#include "aieo/error.hpp"

namespace aieo {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::KindConflict: return "KindConflict";
        case ErrorCode::UndeclaredEntity: return "UndeclaredEntity";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsupportedFeature: return "UnsupportedFeature";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
        case ErrorCode::UnknownFact: return "UnknownFact";
        case ErrorCode::UnknownConcept: return "UnknownConcept";
        case ErrorCode::MissingArgument: return "MissingArgument";
        case ErrorCode::DuplicateFramework: return "DuplicateFramework";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::UnknownFramework: return "UnknownFramework";
        case ErrorCode::UnknownAnnotationProperty: return "UnknownAnnotationProperty";
        case ErrorCode::InsufficientFrameworks: return "InsufficientFrameworks";
        case ErrorCode::UnconfirmedProposal: return "UnconfirmedProposal";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::string ParseDiagnostic::to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::Error ? "error: " : "warning: ") + message;
}

namespace {

std::string first_message(const std::vector<ParseDiagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        if (d.severity == Severity::Error) return d.to_string();
    }
    return diagnostics.empty() ? std::string("parse failed") : diagnostics.front().to_string();
}

}  // namespace

ParseError::ParseError(ErrorCode code, std::vector<ParseDiagnostic> diagnostics)
    : Error(code, first_message(diagnostics)), diagnostics_(std::move(diagnostics)) {
    if (diagnostics_.empty()) diagnostics_.push_back({1, 1, "parse failed", Severity::Error});
}

std::pair<int, int> line_column_at(std::string_view text, std::size_t offset) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace aieo
