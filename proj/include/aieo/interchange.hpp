#pragma once

#include "aieo/store.hpp"

#include <string>
#include <string_view>

namespace aieo {

// JSON interchange form:
//   {"prefixes": {"aieo": "https://w3id.org/aieo#", ...},
//    "axioms": [{"kind": "SubClassOf", "sub": "aieo:Risk_keyword", "sup": "aieo:Keyword"}, ...]}
//
// One object per axiom; "kind" is the variant name and the remaining fields
// are the variant's fields (Declaration uses "entityKind"; n-ary and pair
// axioms use "classes", "properties" or "individuals"; annotation values are
// {"text": ..., "language": ...}). IRIs may be CURIEs or absolute.
std::string serialize_interchange(const OntologyStore& store);

// Throws ParseError(SyntaxError) for malformed JSON, Error(SchemaViolation)
// for unknown kinds or missing fields, and store errors for invalid axioms.
OntologyStore parse_interchange(std::string_view text);

}  // namespace aieo
