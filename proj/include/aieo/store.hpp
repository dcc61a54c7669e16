#pragma once

#include "aieo/axiom.hpp"
#include "aieo/iri.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace aieo {

// The axiom set plus its declarations and lookup indexes.
//
// Every mutation validates the axiom against the declarations (each
// referenced IRI must be declared with the kind its position requires),
// normalizes it and updates the indexes. A store can therefore never hold a
// structurally invalid axiom. Copies are independent; a const store is safe
// to share between threads.
class OntologyStore {
public:
    OntologyStore();

    const PrefixMap& prefixes() const noexcept { return prefixes_; }
    PrefixMap& prefixes() noexcept { return prefixes_; }

    // Idempotent for an identical (iri, kind). Returns true if the declaration is new.
    // Throws Error(KindConflict) if iri is already declared with another kind.
    bool declare(const Iri& iri, EntityKind kind);

    // Returns true if the axiom was not yet present.
    // Throws Error(UndeclaredEntity), Error(KindMismatch) or Error(ValidationError).
    bool add(const Axiom& axiom);

    // Checks what add() would check, without mutating.
    void check_addable(const Axiom& axiom) const;

    bool contains(const Axiom& axiom) const;
    std::optional<EntityKind> kind_of(const Iri& iri) const;
    bool is_declared(const Iri& iri, EntityKind kind) const;

    const std::set<Axiom>& axioms() const noexcept { return axioms_; }
    std::size_t size() const noexcept { return axioms_.size(); }
    bool empty() const noexcept { return axioms_.empty(); }

    // Declared IRIs of one kind, sorted.
    std::vector<Iri> entities(EntityKind kind) const;

    template <class T>
    std::vector<T> all() const {
        std::vector<T> out;
        for (const auto& axiom : axioms_) {
            if (const auto* typed = std::get_if<T>(&axiom)) out.push_back(*typed);
        }
        return out;
    }

    // Axioms whose subject-like position mentions iri (assertion subjects,
    // subclass/subproperty children, equivalence and pair members, annotated entities).
    std::vector<Axiom> axioms_by_subject(const Iri& iri) const;
    // Axioms mentioning iri in a property position.
    std::vector<Axiom> axioms_by_property(const Iri& iri) const;
    // Axioms mentioning iri in a class position.
    std::vector<Axiom> axioms_by_class(const Iri& iri) const;

    // Annotation values of `property` on `subject`, in sorted order.
    std::vector<AnnotationValue> annotations(const Iri& subject, const Iri& property) const;

    // Re-validates every axiom against the declarations. Throws like add().
    void validate() const;

    // Rebuilds the indexes from scratch and compares them with the live ones.
    bool indexes_consistent() const;

    bool same_axioms(const OntologyStore& other) const { return axioms_ == other.axioms_; }

private:
    using Index = std::map<Iri, std::set<Axiom>>;

    struct Indexes {
        Index by_subject;
        Index by_property;
        Index by_class;
        bool operator==(const Indexes&) const = default;
    };

    static void index_axiom(Indexes& indexes, const Axiom& axiom);
    static std::vector<Axiom> lookup(const Index& index, const Iri& iri);

    PrefixMap prefixes_;
    std::map<Iri, EntityKind> declarations_;
    std::set<Axiom> axioms_;
    Indexes indexes_;
};

}  // namespace aieo
