#pragma once

#include "aieo/iri.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aieo {

enum class EntityKind { OwlClass, ObjectProperty, AnnotationProperty, DataProperty, NamedIndividual };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> entity_kind_from_string(std::string_view text);

struct AnnotationValue {
    std::string text;
    std::optional<std::string> language;

    auto operator<=>(const AnnotationValue&) const = default;
};

struct Declaration {
    Iri iri;
    EntityKind kind;
    auto operator<=>(const Declaration&) const = default;
};

struct SubClassOf {
    Iri sub;
    Iri sup;
    auto operator<=>(const SubClassOf&) const = default;
};

// Members are kept sorted and unique.
struct EquivalentClasses {
    std::vector<Iri> classes;
    auto operator<=>(const EquivalentClasses&) const = default;
};

// Unordered pair, stored with first < second.
struct DisjointClasses {
    Iri first;
    Iri second;
    auto operator<=>(const DisjointClasses&) const = default;
};

struct SubObjectPropertyOf {
    Iri sub;
    Iri sup;
    auto operator<=>(const SubObjectPropertyOf&) const = default;
};

struct EquivalentObjectProperties {
    std::vector<Iri> properties;
    auto operator<=>(const EquivalentObjectProperties&) const = default;
};

struct ObjectPropertyRange {
    Iri property;
    Iri cls;
    auto operator<=>(const ObjectPropertyRange&) const = default;
};

struct ObjectPropertyDomain {
    Iri property;
    Iri cls;
    auto operator<=>(const ObjectPropertyDomain&) const = default;
};

struct ClassAssertion {
    Iri cls;
    Iri individual;
    auto operator<=>(const ClassAssertion&) const = default;
};

struct ObjectPropertyAssertion {
    Iri subject;
    Iri property;
    Iri object;
    auto operator<=>(const ObjectPropertyAssertion&) const = default;
};

// Unordered pair, stored with first < second.
struct SameIndividual {
    Iri first;
    Iri second;
    auto operator<=>(const SameIndividual&) const = default;
};

struct AnnotationAssertion {
    Iri subject;
    Iri property;
    AnnotationValue value;
    auto operator<=>(const AnnotationAssertion&) const = default;
};

using Axiom = std::variant<Declaration, SubClassOf, EquivalentClasses, DisjointClasses, SubObjectPropertyOf,
                           EquivalentObjectProperties, ObjectPropertyRange, ObjectPropertyDomain, ClassAssertion,
                           ObjectPropertyAssertion, SameIndividual, AnnotationAssertion>;

// Helpers that build axioms already in normal form.
EquivalentClasses make_equivalent_classes(std::vector<Iri> classes);
EquivalentObjectProperties make_equivalent_properties(std::vector<Iri> properties);
DisjointClasses make_disjoint(Iri a, Iri b);
SameIndividual make_same(Iri a, Iri b);

// Sorts and deduplicates member lists and orders unordered pairs.
Axiom normalize(Axiom axiom);

enum class AxiomCategory { Declaration, Logical, Annotation };
AxiomCategory category_of(const Axiom& axiom);

// Variant tag as used in the JSON interchange ("SubClassOf", "ClassAssertion", ...).
std::string_view kind_name(const Axiom& axiom);

// Functional-syntax-like rendering, e.g. `ClassAssertion(aieo:Principle aieo:AU_Fairness)`.
std::string to_string(const Axiom& axiom, const PrefixMap& prefixes);

// Every IRI the axiom mentions, paired with the kind required at that position.
// AnnotationAssertion subjects accept any declared kind and are reported with nullopt.
std::vector<std::pair<Iri, std::optional<EntityKind>>> referenced_entities(const Axiom& axiom);

}  // namespace aieo
