#pragma once

#include "aieo/error.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace aieo::detail {

// Parses JSON, mapping parser failures to ParseError(SyntaxError) with a line/column.
inline nlohmann::json parse_json_document(std::string_view text) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_column_at(text, offset);
        throw ParseError(ErrorCode::SyntaxError, {{line, column, "malformed JSON", Severity::Error}});
    }
}

inline std::string required_string(const nlohmann::json& j, const char* field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_string()) {
        throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' must be a string");
    }
    return j[field].get<std::string>();
}

}  // namespace aieo::detail
