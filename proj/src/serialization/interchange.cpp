#include "aieo/interchange.hpp"

#include "serialization/json_util.hpp"
#include "aieo/detail/overloaded.hpp"
#include "aieo/error.hpp"

#include <json.hpp>

namespace aieo {

using detail::Overloaded;
using nlohmann::json;

namespace {

json iri_list(const std::vector<Iri>& iris, const PrefixMap& px) {
    json out = json::array();
    for (const auto& iri : iris) out.push_back(px.compact(iri));
    return out;
}

json axiom_to_json(const Axiom& axiom, const PrefixMap& px) {
    json j;
    j["kind"] = std::string(kind_name(axiom));
    auto c = [&](const Iri& iri) { return px.compact(iri); };
    std::visit(Overloaded{
                   [&](const Declaration& ax) {
                       j["iri"] = c(ax.iri);
                       j["entityKind"] = std::string(to_string(ax.kind));
                   },
                   [&](const SubClassOf& ax) {
                       j["sub"] = c(ax.sub);
                       j["sup"] = c(ax.sup);
                   },
                   [&](const EquivalentClasses& ax) { j["classes"] = iri_list(ax.classes, px); },
                   [&](const DisjointClasses& ax) { j["classes"] = iri_list({ax.first, ax.second}, px); },
                   [&](const SubObjectPropertyOf& ax) {
                       j["sub"] = c(ax.sub);
                       j["sup"] = c(ax.sup);
                   },
                   [&](const EquivalentObjectProperties& ax) { j["properties"] = iri_list(ax.properties, px); },
                   [&](const ObjectPropertyRange& ax) {
                       j["prop"] = c(ax.property);
                       j["cls"] = c(ax.cls);
                   },
                   [&](const ObjectPropertyDomain& ax) {
                       j["prop"] = c(ax.property);
                       j["cls"] = c(ax.cls);
                   },
                   [&](const ClassAssertion& ax) {
                       j["cls"] = c(ax.cls);
                       j["ind"] = c(ax.individual);
                   },
                   [&](const ObjectPropertyAssertion& ax) {
                       j["subject"] = c(ax.subject);
                       j["prop"] = c(ax.property);
                       j["object"] = c(ax.object);
                   },
                   [&](const SameIndividual& ax) { j["individuals"] = iri_list({ax.first, ax.second}, px); },
                   [&](const AnnotationAssertion& ax) {
                       j["subject"] = c(ax.subject);
                       j["annProp"] = c(ax.property);
                       json value{{"text", ax.value.text}};
                       if (ax.value.language) value["language"] = *ax.value.language;
                       j["value"] = value;
                   },
               },
               axiom);
    return j;
}

class AxiomReader {
public:
    explicit AxiomReader(const PrefixMap& px) : px_(px) {}

    Axiom read(const json& j) const {
        if (!j.is_object()) throw Error(ErrorCode::SchemaViolation, "axiom entries must be objects");
        const std::string kind = detail::required_string(j, "kind");
        if (kind == "Declaration") {
            auto entity = entity_kind_from_string(detail::required_string(j, "entityKind"));
            if (!entity) throw Error(ErrorCode::SchemaViolation, "field 'entityKind' has an unknown value");
            return Declaration{iri(j, "iri"), *entity};
        }
        if (kind == "SubClassOf") return SubClassOf{iri(j, "sub"), iri(j, "sup")};
        if (kind == "EquivalentClasses") return make_equivalent_classes(list(j, "classes"));
        if (kind == "DisjointClasses") {
            auto pair = exact_pair(j, "classes");
            return make_disjoint(pair[0], pair[1]);
        }
        if (kind == "SubObjectPropertyOf") return SubObjectPropertyOf{iri(j, "sub"), iri(j, "sup")};
        if (kind == "EquivalentObjectProperties") return make_equivalent_properties(list(j, "properties"));
        if (kind == "ObjectPropertyRange") return ObjectPropertyRange{iri(j, "prop"), iri(j, "cls")};
        if (kind == "ObjectPropertyDomain") return ObjectPropertyDomain{iri(j, "prop"), iri(j, "cls")};
        if (kind == "ClassAssertion") return ClassAssertion{iri(j, "cls"), iri(j, "ind")};
        if (kind == "ObjectPropertyAssertion")
            return ObjectPropertyAssertion{iri(j, "subject"), iri(j, "prop"), iri(j, "object")};
        if (kind == "SameIndividual") {
            auto pair = exact_pair(j, "individuals");
            return make_same(pair[0], pair[1]);
        }
        if (kind == "AnnotationAssertion") {
            if (!j.contains("value") || !j["value"].is_object())
                throw Error(ErrorCode::SchemaViolation, "field 'value' must be an object");
            AnnotationValue value{detail::required_string(j["value"], "text"), std::nullopt};
            if (j["value"].contains("language")) value.language = detail::required_string(j["value"], "language");
            return AnnotationAssertion{iri(j, "subject"), iri(j, "annProp"), value};
        }
        throw Error(ErrorCode::SchemaViolation, "unknown axiom kind '" + kind + "'");
    }

private:
    Iri iri(const json& j, const char* field) const {
        auto text = detail::required_string(j, field);
        auto resolved = px_.try_expand(text);
        if (!resolved) throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' is not an IRI");
        return *resolved;
    }

    std::vector<Iri> list(const json& j, const char* field) const {
        if (!j.contains(field) || !j[field].is_array())
            throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' must be an array");
        std::vector<Iri> out;
        for (const auto& item : j[field]) {
            if (!item.is_string())
                throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' must hold strings");
            auto resolved = px_.try_expand(item.get<std::string>());
            if (!resolved) throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' holds a non-IRI");
            out.push_back(*resolved);
        }
        return out;
    }

    std::vector<Iri> exact_pair(const json& j, const char* field) const {
        auto out = list(j, field);
        if (out.size() != 2) throw Error(ErrorCode::SchemaViolation, std::string("field '") + field + "' needs 2 items");
        return out;
    }

    const PrefixMap& px_;
};

}  // namespace

std::string serialize_interchange(const OntologyStore& store) {
    json doc;
    doc["prefixes"] = json::object();
    for (const auto& [prefix, base] : store.prefixes().entries()) doc["prefixes"][prefix] = base;
    doc["axioms"] = json::array();
    for (const auto& axiom : store.axioms()) doc["axioms"].push_back(axiom_to_json(axiom, store.prefixes()));
    return doc.dump(2) + "\n";
}

OntologyStore parse_interchange(std::string_view text) {
    json doc = detail::parse_json_document(text);
    if (!doc.is_object()) throw Error(ErrorCode::SchemaViolation, "interchange document must be a JSON object");
    OntologyStore store;
    if (doc.contains("prefixes")) {
        if (!doc["prefixes"].is_object()) throw Error(ErrorCode::SchemaViolation, "field 'prefixes' must be an object");
        for (const auto& [prefix, base] : doc["prefixes"].items()) {
            if (!base.is_string() || !is_absolute_iri(base.get<std::string>()))
                throw Error(ErrorCode::SchemaViolation, "prefix '" + prefix + "' must map to an absolute IRI");
            store.prefixes().set(prefix, base.get<std::string>());
        }
    }
    if (!doc.contains("axioms") || !doc["axioms"].is_array())
        throw Error(ErrorCode::SchemaViolation, "field 'axioms' must be an array");
    AxiomReader reader(store.prefixes());
    std::vector<Axiom> rest;
    for (const auto& entry : doc["axioms"]) {
        Axiom axiom = reader.read(entry);
        if (std::holds_alternative<Declaration>(axiom)) {
            store.add(axiom);
        } else {
            rest.push_back(std::move(axiom));
        }
    }
    for (const auto& axiom : rest) store.add(axiom);
    return store;
}

}  // namespace aieo
