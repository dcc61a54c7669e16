#include "aieo/query.hpp"

#include "aieo/vocabulary.hpp"

#include <algorithm>
#include <set>

namespace aieo {

namespace {

constexpr std::pair<CannedQuery, std::string_view> kNames[] = {
    {CannedQuery::PrinciplesByFramework, "principles_by_framework"},
    {CannedQuery::DescribeConcept, "describe_concept"},
    {CannedQuery::ScenariosFor, "scenarios_for"},
    {CannedQuery::UniqueConcepts, "unique_concepts"},
};

std::vector<Iri> linking_properties() {
    return {vocab::principle(), vocab::requirement(), vocab::fundamentalRight(), vocab::dimension()};
}

std::vector<Iri> scenario_properties() {
    return {vocab::scenario(), vocab::useCase(), vocab::application(), vocab::example()};
}

void require_individual(const Materialization& mat, const std::optional<Iri>& arg) {
    if (!arg) throw Error(ErrorCode::MissingArgument, "this query needs a concept IRI argument");
    if (mat.base().kind_of(*arg) != EntityKind::NamedIndividual) {
        throw Error(ErrorCode::UnknownConcept, arg->str() + " is not a declared individual");
    }
}

// The concept and its SameIndividual peers.
std::set<Iri> with_peers(const Materialization& mat, const Iri& concept_iri) {
    auto out = mat.same_as(concept_iri);
    out.insert(concept_iri);
    return out;
}

ResultSet finish(std::vector<std::string> variables, std::set<std::vector<Term>> rows) {
    return ResultSet{std::move(variables), {rows.begin(), rows.end()}};
}

ResultSet principles_by_framework(const std::optional<Iri>& framework, const Materialization& mat) {
    if (framework && !mat.types_of(*framework).count(vocab::Framework())) {
        throw Error(ErrorCode::UnknownConcept, framework->str() + " is not a Framework individual");
    }
    std::set<std::vector<Term>> rows;
    for (const auto& pa : mat.property_assertions()) {
        if (pa.property != vocab::principle()) continue;
        if (framework && pa.subject != *framework) continue;
        if (!mat.types_of(pa.subject).count(vocab::Framework())) continue;
        rows.insert({pa.subject, pa.object});
    }
    return finish({"framework", "principle"}, std::move(rows));
}

ResultSet describe_concept(const Iri& concept_iri, const Materialization& mat) {
    const std::vector<Iri> wanted{vocab::shortDescription(), vocab::reference()};
    std::set<std::vector<Term>> rows;
    for (const auto& peer : with_peers(mat, concept_iri)) {
        const auto frameworks = frameworks_asserting(mat, peer);
        for (const auto& ann : mat.base().all<AnnotationAssertion>()) {
            if (ann.subject != peer) continue;
            if (std::find(wanted.begin(), wanted.end(), ann.property) == wanted.end()) continue;
            for (const auto& f : frameworks) rows.insert({f, peer, ann.property, ann.value});
        }
    }
    return finish({"framework", "concept", "property", "value"}, std::move(rows));
}

ResultSet scenarios_for(const Iri& concept_iri, const Materialization& mat) {
    const auto props = scenario_properties();
    const auto subjects = with_peers(mat, concept_iri);
    std::set<std::vector<Term>> rows;
    for (const auto& pa : mat.property_assertions()) {
        if (!subjects.count(pa.subject)) continue;
        if (std::find(props.begin(), props.end(), pa.property) == props.end()) continue;
        rows.insert({pa.object});
    }
    return finish({"scenario"}, std::move(rows));
}

ResultSet unique_concepts(const std::optional<Iri>& framework, const Materialization& mat) {
    if (framework && !mat.types_of(*framework).count(vocab::Framework())) {
        throw Error(ErrorCode::UnknownConcept, framework->str() + " is not a Framework individual");
    }
    std::set<std::vector<Term>> rows;
    for (const auto& pa : mat.base().all<ObjectPropertyAssertion>()) {
        if (pa.property != vocab::principle() && pa.property != vocab::requirement()) continue;
        if (framework && pa.subject != *framework) continue;
        if (!mat.types_of(pa.subject).count(vocab::Framework())) continue;
        bool shared = false;
        for (const auto& peer : mat.same_as(pa.object)) {
            for (const auto& other : frameworks_asserting(mat, peer)) {
                if (other != pa.subject) shared = true;
            }
        }
        if (!shared) rows.insert({pa.subject, pa.object});
    }
    return finish({"framework", "concept"}, std::move(rows));
}

}  // namespace

std::optional<CannedQuery> canned_query_from_string(std::string_view name) {
    for (const auto& [q, n] : kNames) {
        if (n == name) return q;
    }
    return std::nullopt;
}

std::string_view to_string(CannedQuery query) {
    for (const auto& [q, n] : kNames) {
        if (q == query) return n;
    }
    return "unknown";
}

std::vector<Iri> frameworks_asserting(const Materialization& mat, const Iri& concept_iri) {
    const auto props = linking_properties();
    std::set<Iri> out;
    for (const auto& pa : mat.base().all<ObjectPropertyAssertion>()) {
        if (pa.object != concept_iri) continue;
        if (std::find(props.begin(), props.end(), pa.property) == props.end()) continue;
        if (mat.types_of(pa.subject).count(vocab::Framework())) out.insert(pa.subject);
    }
    return {out.begin(), out.end()};
}

ResultSet canned_query(CannedQuery query, const std::optional<Iri>& arg, const Materialization& mat) {
    switch (query) {
        case CannedQuery::PrinciplesByFramework: return principles_by_framework(arg, mat);
        case CannedQuery::DescribeConcept: require_individual(mat, arg); return describe_concept(*arg, mat);
        case CannedQuery::ScenariosFor: require_individual(mat, arg); return scenarios_for(*arg, mat);
        case CannedQuery::UniqueConcepts: return unique_concepts(arg, mat);
    }
    return {};
}

std::vector<std::string> reference_query_texts(CannedQuery query, const std::optional<Iri>& arg) {
    switch (query) {
        case CannedQuery::PrinciplesByFramework:
            // The subset cannot pin ?framework to a constant, so only the unrestricted form has a text.
            if (arg) return {};
            return {"SELECT DISTINCT ?framework ?principle WHERE { ?framework a aieo:Framework . "
                    "?framework aieo:principle ?principle }"};
        case CannedQuery::ScenariosFor: {
            if (!arg) return {};
            const std::string c = "<" + arg->str() + ">";
            return {"SELECT DISTINCT ?scenario WHERE { " + c + " aieo:scenario ?scenario }",
                    "SELECT DISTINCT ?scenario WHERE { " + c + " aieo:example ?scenario }"};
        }
        case CannedQuery::DescribeConcept:
        case CannedQuery::UniqueConcepts: return {};
    }
    return {};
}

}  // namespace aieo
