#pragma once

#include "aieo/store.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string_view>
#include <vector>

namespace aieo {

enum class RuleId {
    RangeTyping,          // P(x,y), range(P)=C       => C(y)
    DomainTyping,         // P(x,y), domain(P)=C      => C(x)
    SubClass,             // C(x), C <= D             => D(x)
    ClassEquivalence,     // C(x), C == D             => D(x)
    PropertyEquivalence,  // P(x,y), P == Q           => Q(x,y)
    SubProperty,          // P(x,y), P <= Q           => Q(x,y)
    SameIndividual,       // a = b carries types and assertions across; = is transitive
    DisjointTyping,       // disjoint membership without identity merging
    SameAsDisjoint,       // disjoint membership that only appears after merging
};

// Stable external names, e.g. "R1_RangeTyping", "D2_SameAsDisjoint".
std::string_view to_string(RuleId rule);

struct InferenceTrace {
    Axiom conclusion;
    RuleId rule;
    std::vector<Axiom> premises;

    auto operator<=>(const InferenceTrace&) const = default;
};

struct ConsistencyViolation {
    Iri individual;
    Iri classA;  // classA < classB
    Iri classB;
    RuleId rule;
    std::vector<InferenceTrace> traces;  // support for both memberships; empty when asserted

    bool operator==(const ConsistencyViolation&) const = default;
};

struct ReasonerOptions {
    std::size_t maxDerivedFacts = 1'000'000;
    bool applySameIndividual = true;
    bool checkConsistency = true;
};

// The closure of a store under the inference rules. Immutable once built.
//
// Only assertion-level facts are ever inferred: ClassAssertion,
// ObjectPropertyAssertion and SameIndividual. Schema axioms are used as rule
// premises but never derived.
class Materialization {
public:
    const OntologyStore& base() const noexcept { return *base_; }
    const std::set<Axiom>& inferred() const noexcept { return inferred_; }

    // Per inferred fact, every one-step derivation whose premises were all
    // derived strictly earlier; unwinding always reaches asserted axioms.
    const std::map<Axiom, std::vector<InferenceTrace>>& traces() const noexcept { return traces_; }

    bool consistent() const noexcept { return violations_.empty(); }
    const std::vector<ConsistencyViolation>& violations() const noexcept { return violations_; }

    bool contains(const Axiom& axiom) const;
    bool is_asserted(const Axiom& axiom) const { return base_->contains(axiom); }

    // Asserted plus inferred facts.
    const std::set<ClassAssertion>& class_assertions() const noexcept { return class_assertions_; }
    const std::set<ObjectPropertyAssertion>& property_assertions() const noexcept { return property_assertions_; }
    const std::set<SameIndividual>& same_individuals() const noexcept { return same_individuals_; }

    std::set<Iri> types_of(const Iri& individual) const;
    std::set<Iri> members_of(const Iri& cls) const;
    // Individuals identified with `individual`, excluding itself.
    std::set<Iri> same_as(const Iri& individual) const;

    // Base axioms plus inferred facts as one store.
    OntologyStore to_store() const;

private:
    friend Materialization materialize(const OntologyStore&, const ReasonerOptions&);

    std::shared_ptr<const OntologyStore> base_;
    std::set<Axiom> inferred_;
    std::map<Axiom, std::vector<InferenceTrace>> traces_;
    std::vector<ConsistencyViolation> violations_;
    std::set<ClassAssertion> class_assertions_;
    std::set<ObjectPropertyAssertion> property_assertions_;
    std::set<SameIndividual> same_individuals_;
    std::map<Iri, std::set<Iri>> types_by_individual_;
    std::map<Iri, std::set<Iri>> members_by_class_;
    std::map<Iri, std::set<Iri>> same_by_individual_;
};

// Semi-naive forward chaining to the fixed point. Inconsistency never aborts;
// violations are collected on the result. Throws Error(ValidationError) for a
// malformed store and Error(IterationLimitExceeded) past maxDerivedFacts.
Materialization materialize(const OntologyStore& store, const ReasonerOptions& options = {});

// One violation per (individual, disjoint pair) with both memberships in the
// materialization, sorted.
std::vector<ConsistencyViolation> check_consistency(const Materialization& mat);

// Every one-step rule instantiation concluding `fact` over base plus inferred.
// Empty iff the fact is asserted. Throws Error(UnknownFact) otherwise.
std::vector<InferenceTrace> explain(const Materialization& mat, const Axiom& fact);

enum class EquivalenceKind { Class, Property, Individual };

// Partition of the declared IRIs of one kind under the reflexive, symmetric,
// transitive closure of the matching equivalence axioms. Blocks and members sorted.
std::vector<std::vector<Iri>> equivalence_classes(const OntologyStore& store, EquivalenceKind kind);

}  // namespace aieo
