#include "aieo/axiom.hpp"

#include "aieo/detail/overloaded.hpp"
#include "aieo/error.hpp"

#include <algorithm>

namespace aieo {

using detail::Overloaded;

std::string_view to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::OwlClass: return "OwlClass";
        case EntityKind::ObjectProperty: return "ObjectProperty";
        case EntityKind::AnnotationProperty: return "AnnotationProperty";
        case EntityKind::DataProperty: return "DataProperty";
        case EntityKind::NamedIndividual: return "NamedIndividual";
    }
    return "?";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view text) {
    for (auto kind : {EntityKind::OwlClass, EntityKind::ObjectProperty, EntityKind::AnnotationProperty,
                      EntityKind::DataProperty, EntityKind::NamedIndividual}) {
        if (to_string(kind) == text) return kind;
    }
    return std::nullopt;
}

namespace {

std::vector<Iri> sorted_unique(std::vector<Iri> iris) {
    std::sort(iris.begin(), iris.end());
    iris.erase(std::unique(iris.begin(), iris.end()), iris.end());
    return iris;
}

}  // namespace

EquivalentClasses make_equivalent_classes(std::vector<Iri> classes) {
    return EquivalentClasses{sorted_unique(std::move(classes))};
}

EquivalentObjectProperties make_equivalent_properties(std::vector<Iri> properties) {
    return EquivalentObjectProperties{sorted_unique(std::move(properties))};
}

DisjointClasses make_disjoint(Iri a, Iri b) {
    if (b < a) std::swap(a, b);
    return DisjointClasses{std::move(a), std::move(b)};
}

SameIndividual make_same(Iri a, Iri b) {
    if (b < a) std::swap(a, b);
    return SameIndividual{std::move(a), std::move(b)};
}

Axiom normalize(Axiom axiom) {
    return std::visit(
        Overloaded{
            [](EquivalentClasses& ax) -> Axiom { return make_equivalent_classes(std::move(ax.classes)); },
            [](EquivalentObjectProperties& ax) -> Axiom {
                return make_equivalent_properties(std::move(ax.properties));
            },
            [](DisjointClasses& ax) -> Axiom { return make_disjoint(std::move(ax.first), std::move(ax.second)); },
            [](SameIndividual& ax) -> Axiom { return make_same(std::move(ax.first), std::move(ax.second)); },
            [](auto& ax) -> Axiom { return std::move(ax); },
        },
        axiom);
}

AxiomCategory category_of(const Axiom& axiom) {
    if (std::holds_alternative<Declaration>(axiom)) return AxiomCategory::Declaration;
    if (std::holds_alternative<AnnotationAssertion>(axiom)) return AxiomCategory::Annotation;
    return AxiomCategory::Logical;
}

std::string_view kind_name(const Axiom& axiom) {
    return std::visit(Overloaded{
                          [](const Declaration&) { return std::string_view("Declaration"); },
                          [](const SubClassOf&) { return std::string_view("SubClassOf"); },
                          [](const EquivalentClasses&) { return std::string_view("EquivalentClasses"); },
                          [](const DisjointClasses&) { return std::string_view("DisjointClasses"); },
                          [](const SubObjectPropertyOf&) { return std::string_view("SubObjectPropertyOf"); },
                          [](const EquivalentObjectProperties&) {
                              return std::string_view("EquivalentObjectProperties");
                          },
                          [](const ObjectPropertyRange&) { return std::string_view("ObjectPropertyRange"); },
                          [](const ObjectPropertyDomain&) { return std::string_view("ObjectPropertyDomain"); },
                          [](const ClassAssertion&) { return std::string_view("ClassAssertion"); },
                          [](const ObjectPropertyAssertion&) {
                              return std::string_view("ObjectPropertyAssertion");
                          },
                          [](const SameIndividual&) { return std::string_view("SameIndividual"); },
                          [](const AnnotationAssertion&) { return std::string_view("AnnotationAssertion"); },
                      },
                      axiom);
}

namespace {

std::string quote_literal(const AnnotationValue& value) {
    std::string out = "\"";
    for (char c : value.text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    if (value.language) out += "@" + *value.language;
    return out;
}

std::string join(const std::vector<Iri>& iris, const PrefixMap& prefixes) {
    std::string out;
    for (const auto& iri : iris) {
        if (!out.empty()) out += ' ';
        out += prefixes.compact(iri);
    }
    return out;
}

}  // namespace

std::string to_string(const Axiom& axiom, const PrefixMap& p) {
    std::string body = std::visit(
        Overloaded{
            [&](const Declaration& ax) {
                return std::string(to_string(ax.kind)) + "(" + p.compact(ax.iri) + ")";
            },
            [&](const SubClassOf& ax) { return p.compact(ax.sub) + " " + p.compact(ax.sup); },
            [&](const EquivalentClasses& ax) { return join(ax.classes, p); },
            [&](const DisjointClasses& ax) { return p.compact(ax.first) + " " + p.compact(ax.second); },
            [&](const SubObjectPropertyOf& ax) { return p.compact(ax.sub) + " " + p.compact(ax.sup); },
            [&](const EquivalentObjectProperties& ax) { return join(ax.properties, p); },
            [&](const ObjectPropertyRange& ax) { return p.compact(ax.property) + " " + p.compact(ax.cls); },
            [&](const ObjectPropertyDomain& ax) { return p.compact(ax.property) + " " + p.compact(ax.cls); },
            [&](const ClassAssertion& ax) { return p.compact(ax.cls) + " " + p.compact(ax.individual); },
            [&](const ObjectPropertyAssertion& ax) {
                return p.compact(ax.property) + " " + p.compact(ax.subject) + " " + p.compact(ax.object);
            },
            [&](const SameIndividual& ax) { return p.compact(ax.first) + " " + p.compact(ax.second); },
            [&](const AnnotationAssertion& ax) {
                return p.compact(ax.property) + " " + p.compact(ax.subject) + " " + quote_literal(ax.value);
            },
        },
        axiom);
    return std::string(kind_name(axiom)) + "(" + body + ")";
}

std::vector<std::pair<Iri, std::optional<EntityKind>>> referenced_entities(const Axiom& axiom) {
    using Ref = std::pair<Iri, std::optional<EntityKind>>;
    using Refs = std::vector<Ref>;
    constexpr auto C = EntityKind::OwlClass;
    constexpr auto P = EntityKind::ObjectProperty;
    constexpr auto I = EntityKind::NamedIndividual;
    return std::visit(
        Overloaded{
            [](const Declaration&) { return Refs{}; },
            [&](const SubClassOf& ax) { return Refs{{ax.sub, C}, {ax.sup, C}}; },
            [&](const EquivalentClasses& ax) {
                Refs refs;
                for (const auto& c : ax.classes) refs.emplace_back(c, C);
                return refs;
            },
            [&](const DisjointClasses& ax) { return Refs{{ax.first, C}, {ax.second, C}}; },
            [&](const SubObjectPropertyOf& ax) { return Refs{{ax.sub, P}, {ax.sup, P}}; },
            [&](const EquivalentObjectProperties& ax) {
                Refs refs;
                for (const auto& q : ax.properties) refs.emplace_back(q, P);
                return refs;
            },
            [&](const ObjectPropertyRange& ax) { return Refs{{ax.property, P}, {ax.cls, C}}; },
            [&](const ObjectPropertyDomain& ax) { return Refs{{ax.property, P}, {ax.cls, C}}; },
            [&](const ClassAssertion& ax) { return Refs{{ax.cls, C}, {ax.individual, I}}; },
            [&](const ObjectPropertyAssertion& ax) {
                return Refs{{ax.subject, I}, {ax.property, P}, {ax.object, I}};
            },
            [&](const SameIndividual& ax) { return Refs{{ax.first, I}, {ax.second, I}}; },
            [&](const AnnotationAssertion& ax) {
                return Refs{{ax.subject, std::nullopt}, {ax.property, EntityKind::AnnotationProperty}};
            },
        },
        axiom);
}

}  // namespace aieo
