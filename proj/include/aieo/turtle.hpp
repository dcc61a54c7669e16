#pragma once

#include "aieo/error.hpp"
#include "aieo/store.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace aieo {

// Turtle subset: @prefix/PREFIX directives, prefixed names and absolute
// <IRI>s, the `a` shorthand, `;` and `,` lists, and plain or
// language-tagged string literals. Blank nodes, collections, @base,
// datatyped/numeric/boolean literals and long strings are rejected with
// UnsupportedFeature.
//
// Triples map onto axioms as follows: `a` with an OWL entity type declares;
// `a` with a declared class asserts membership; rdfs:subClassOf,
// owl:disjointWith, rdfs:subPropertyOf, rdfs:range, rdfs:domain and
// owl:sameAs map one-to-one; a declared annotation property with a literal
// object is an annotation assertion; a declared object property is a
// property assertion.
//
// owl:equivalentClass and owl:equivalentProperty are n-ary: the subject and
// every object of one comma-separated object list form a single axiom.
// Declarations may appear anywhere in the document.
struct TurtleParseResult {
    OntologyStore store;
    std::vector<ParseDiagnostic> warnings;
};

// Throws ParseError with code SyntaxError, UnsupportedFeature,
// UndeclaredEntity, KindConflict or KindMismatch.
TurtleParseResult parse_turtle_with_warnings(std::string_view text);
OntologyStore parse_turtle(std::string_view text);

// Canonical, deterministic output: prefixes sorted, subjects sorted by
// absolute IRI, predicates in a fixed order, LF line endings.
std::string serialize_turtle(const OntologyStore& store);

}  // namespace aieo
