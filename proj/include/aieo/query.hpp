#pragma once

#include "aieo/error.hpp"
#include "aieo/reasoner.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aieo {

struct Variable {
    std::string name;  // without the leading '?'
    auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Variable, Iri, AnnotationValue>;

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;
    auto operator<=>(const TriplePattern&) const = default;
};

struct TypeFilter {
    std::string variable;
    Iri cls;
    auto operator<=>(const TypeFilter&) const = default;
};

struct Query {
    std::vector<std::string> projected;
    std::vector<TriplePattern> patterns;
    std::vector<TypeFilter> typeFilters;  // applied after the join
    bool distinct = false;
    std::vector<ParseDiagnostic> warnings;
};

// Query subset:
//   [PREFIX p: <iri>]* SELECT [DISTINCT] (?v ... | *) WHERE { pattern ( . pattern )* [.] }
// where each pattern is three terms: ?variables, <iri>s, prefixed names,
// `a`, or (objects only) string literals. OPTIONAL, FILTER, UNION and the
// other SPARQL 1.1 forms raise UnsupportedFeature; property paths too.
// Patterns sharing no variable with the rest of the query produce a warning.
Query parse_query(std::string_view text, const PrefixMap& prefixes = PrefixMap::standard());

using Term = std::variant<Iri, AnnotationValue>;

struct ResultSet {
    std::vector<std::string> variables;
    std::vector<std::vector<Term>> rows;  // each row aligned with `variables`

    bool operator==(const ResultSet&) const = default;
};

// Triples a query can see: type facts (rdf:type), property assertions,
// owl:sameAs in both directions, and annotation assertions with literal
// objects. Inferred facts are included.
struct Triple {
    Iri subject;
    Iri predicate;
    Term object;
    auto operator<=>(const Triple&) const = default;
};

class FactGraph {
public:
    explicit FactGraph(const Materialization& mat);

    const std::vector<Triple>& triples() const noexcept { return triples_; }
    const std::vector<std::size_t>& with_subject(const Iri& s) const;
    const std::vector<std::size_t>& with_predicate(const Iri& p) const;
    const std::vector<std::size_t>& with_object(const Term& o) const;

private:
    std::vector<Triple> triples_;
    std::map<Iri, std::vector<std::size_t>> by_subject_;
    std::map<Iri, std::vector<std::size_t>> by_predicate_;
    std::map<Term, std::vector<std::size_t>> by_object_;
};

// All homomorphisms of the patterns into the graph, projected and sorted
// lexicographically by projected values.
ResultSet evaluate(const Query& query, const FactGraph& graph);
ResultSet evaluate(const Query& query, const Materialization& mat);

enum class CannedQuery { PrinciplesByFramework, DescribeConcept, ScenariosFor, UniqueConcepts };

std::optional<CannedQuery> canned_query_from_string(std::string_view name);
std::string_view to_string(CannedQuery query);

// principles_by_framework: (?framework, ?principle) pairs; an argument restricts to one framework.
// describe_concept(c): (?framework, ?concept, ?property, ?value) for the
//   shortDescription and reference annotations of c and its SameIndividual
//   peers, attributed to the framework that asserts each peer.
// scenarios_for(c): distinct ?scenario objects of scenario/useCase/application/example
//   assertions from c or its peers.
// unique_concepts([f]): (?framework, ?concept) principles and requirements of
//   a framework with no SameIndividual peer in any other framework.
// Throws Error(MissingArgument) or Error(UnknownConcept).
ResultSet canned_query(CannedQuery query, const std::optional<Iri>& arg, const Materialization& mat);

// Query texts whose union equals the canned query's result (where the subset allows it).
std::vector<std::string> reference_query_texts(CannedQuery query, const std::optional<Iri>& arg);

// The frameworks asserting `concept_iri` via principle/requirement/fundamentalRight/dimension.
std::vector<Iri> frameworks_asserting(const Materialization& mat, const Iri& concept_iri);

std::string render_term(const Term& term, const PrefixMap& prefixes);
std::string to_tsv(const ResultSet& results, const PrefixMap& prefixes);
std::string to_json(const ResultSet& results, const PrefixMap& prefixes);

}  // namespace aieo
