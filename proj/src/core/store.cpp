#include "aieo/store.hpp"

#include "aieo/detail/overloaded.hpp"
#include "aieo/error.hpp"

namespace aieo {

using detail::Overloaded;

OntologyStore::OntologyStore() : prefixes_(PrefixMap::standard()) {}

bool OntologyStore::declare(const Iri& iri, EntityKind kind) { return add(Declaration{iri, kind}); }

void OntologyStore::check_addable(const Axiom& raw) const {
    Axiom axiom = normalize(raw);
    if (const auto* decl = std::get_if<Declaration>(&axiom)) {
        if (decl->iri.empty()) throw Error(ErrorCode::ValidationError, "declaration of an empty IRI");
        auto it = declarations_.find(decl->iri);
        if (it != declarations_.end() && it->second != decl->kind) {
            throw Error(ErrorCode::KindConflict, "<" + decl->iri.str() + "> is declared as " +
                                                     std::string(to_string(it->second)) + ", cannot redeclare as " +
                                                     std::string(to_string(decl->kind)));
        }
        return;
    }
    std::visit(Overloaded{
                   [](const EquivalentClasses& ax) {
                       if (ax.classes.size() < 2)
                           throw Error(ErrorCode::ValidationError, "EquivalentClasses needs two distinct classes");
                   },
                   [](const EquivalentObjectProperties& ax) {
                       if (ax.properties.size() < 2)
                           throw Error(ErrorCode::ValidationError,
                                       "EquivalentObjectProperties needs two distinct properties");
                   },
                   [](const DisjointClasses& ax) {
                       if (ax.first == ax.second)
                           throw Error(ErrorCode::ValidationError, "DisjointClasses needs two distinct classes");
                   },
                   [](const SameIndividual& ax) {
                       if (ax.first == ax.second)
                           throw Error(ErrorCode::ValidationError, "SameIndividual needs two distinct individuals");
                   },
                   [](const AnnotationAssertion& ax) {
                       if (ax.value.text.empty())
                           throw Error(ErrorCode::ValidationError, "annotation value must be non-empty");
                   },
                   [](const auto&) {},
               },
               axiom);
    for (const auto& [iri, required] : referenced_entities(axiom)) {
        auto it = declarations_.find(iri);
        if (it == declarations_.end()) {
            throw Error(ErrorCode::UndeclaredEntity,
                        "<" + iri.str() + "> is not declared (in " + std::string(kind_name(axiom)) + ")");
        }
        if (required && it->second != *required) {
            throw Error(ErrorCode::KindMismatch, "<" + iri.str() + "> is a " + std::string(to_string(it->second)) +
                                                     " but " + std::string(kind_name(axiom)) + " needs a " +
                                                     std::string(to_string(*required)));
        }
    }
}

bool OntologyStore::add(const Axiom& raw) {
    check_addable(raw);
    Axiom axiom = normalize(raw);
    auto [it, inserted] = axioms_.insert(axiom);
    if (!inserted) return false;
    if (const auto* decl = std::get_if<Declaration>(&axiom)) declarations_.emplace(decl->iri, decl->kind);
    index_axiom(indexes_, *it);
    return true;
}

bool OntologyStore::contains(const Axiom& axiom) const { return axioms_.count(normalize(axiom)) > 0; }

std::optional<EntityKind> OntologyStore::kind_of(const Iri& iri) const {
    auto it = declarations_.find(iri);
    if (it == declarations_.end()) return std::nullopt;
    return it->second;
}

bool OntologyStore::is_declared(const Iri& iri, EntityKind kind) const {
    auto found = kind_of(iri);
    return found && *found == kind;
}

std::vector<Iri> OntologyStore::entities(EntityKind kind) const {
    std::vector<Iri> out;
    for (const auto& [iri, k] : declarations_) {
        if (k == kind) out.push_back(iri);
    }
    return out;
}

std::vector<Axiom> OntologyStore::lookup(const Index& index, const Iri& iri) {
    auto it = index.find(iri);
    if (it == index.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<Axiom> OntologyStore::axioms_by_subject(const Iri& iri) const { return lookup(indexes_.by_subject, iri); }
std::vector<Axiom> OntologyStore::axioms_by_property(const Iri& iri) const {
    return lookup(indexes_.by_property, iri);
}
std::vector<Axiom> OntologyStore::axioms_by_class(const Iri& iri) const { return lookup(indexes_.by_class, iri); }

std::vector<AnnotationValue> OntologyStore::annotations(const Iri& subject, const Iri& property) const {
    std::vector<AnnotationValue> out;
    auto it = indexes_.by_subject.find(subject);
    if (it == indexes_.by_subject.end()) return out;
    for (const auto& axiom : it->second) {
        if (const auto* ann = std::get_if<AnnotationAssertion>(&axiom)) {
            if (ann->subject == subject && ann->property == property) out.push_back(ann->value);
        }
    }
    return out;
}

void OntologyStore::index_axiom(Indexes& idx, const Axiom& axiom) {
    auto subj = [&](const Iri& iri) { idx.by_subject[iri].insert(axiom); };
    auto prop = [&](const Iri& iri) { idx.by_property[iri].insert(axiom); };
    auto cls = [&](const Iri& iri) { idx.by_class[iri].insert(axiom); };
    std::visit(Overloaded{
                   [&](const Declaration& ax) {
                       subj(ax.iri);
                       if (ax.kind == EntityKind::OwlClass) cls(ax.iri);
                       if (ax.kind == EntityKind::ObjectProperty || ax.kind == EntityKind::AnnotationProperty ||
                           ax.kind == EntityKind::DataProperty)
                           prop(ax.iri);
                   },
                   [&](const SubClassOf& ax) {
                       subj(ax.sub);
                       cls(ax.sub);
                       cls(ax.sup);
                   },
                   [&](const EquivalentClasses& ax) {
                       for (const auto& c : ax.classes) {
                           subj(c);
                           cls(c);
                       }
                   },
                   [&](const DisjointClasses& ax) {
                       subj(ax.first);
                       subj(ax.second);
                       cls(ax.first);
                       cls(ax.second);
                   },
                   [&](const SubObjectPropertyOf& ax) {
                       subj(ax.sub);
                       prop(ax.sub);
                       prop(ax.sup);
                   },
                   [&](const EquivalentObjectProperties& ax) {
                       for (const auto& p : ax.properties) {
                           subj(p);
                           prop(p);
                       }
                   },
                   [&](const ObjectPropertyRange& ax) {
                       subj(ax.property);
                       prop(ax.property);
                       cls(ax.cls);
                   },
                   [&](const ObjectPropertyDomain& ax) {
                       subj(ax.property);
                       prop(ax.property);
                       cls(ax.cls);
                   },
                   [&](const ClassAssertion& ax) {
                       subj(ax.individual);
                       cls(ax.cls);
                   },
                   [&](const ObjectPropertyAssertion& ax) {
                       subj(ax.subject);
                       prop(ax.property);
                   },
                   [&](const SameIndividual& ax) {
                       subj(ax.first);
                       subj(ax.second);
                   },
                   [&](const AnnotationAssertion& ax) {
                       subj(ax.subject);
                       prop(ax.property);
                   },
               },
               axiom);
}

void OntologyStore::validate() const {
    for (const auto& axiom : axioms_) {
        if (!std::holds_alternative<Declaration>(axiom)) check_addable(axiom);
        if (normalize(axiom) != axiom) throw Error(ErrorCode::ValidationError, "axiom not in normal form");
    }
}

bool OntologyStore::indexes_consistent() const {
    Indexes rebuilt;
    for (const auto& axiom : axioms_) index_axiom(rebuilt, axiom);
    return rebuilt == indexes_;
}

}  // namespace aieo
