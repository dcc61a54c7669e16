#include "aieo/reasoner.hpp"
#include "aieo/seed.hpp"
#include "aieo/vocabulary.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace aieo {
namespace {

using namespace vocab;
using testing::expect_code;

Iri ind(const char* local) { return aieo(local); }

OntologyStore seed_with(std::initializer_list<const char*> individuals) {
    OntologyStore s = seed_aieo_schema();
    for (const char* n : individuals) s.declare(ind(n), EntityKind::NamedIndividual);
    return s;
}

TEST(Reasoner, RangeTypesTheObjectOnly) {
    OntologyStore s = seed_with({"fairness", "AI_system"});
    s.add(ObjectPropertyAssertion{ind("fairness"), keyword(), ind("AI_system")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(m.contains(ClassAssertion{Keyword(), ind("AI_system")}));
    EXPECT_TRUE(m.types_of(ind("fairness")).empty());
    ASSERT_EQ(m.traces().at(ClassAssertion{Keyword(), ind("AI_system")}).size(), 1u);
    EXPECT_EQ(m.traces().at(ClassAssertion{Keyword(), ind("AI_system")}).front().rule, RuleId::RangeTyping);
}

TEST(Reasoner, DomainAxiomsTypeTheSubject) {
    OntologyStore s = seed_with({"f", "p"});
    s.add(ObjectPropertyDomain{principle(), Framework()});
    s.add(ObjectPropertyAssertion{ind("f"), principle(), ind("p")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(m.contains(ClassAssertion{Framework(), ind("f")}));
    EXPECT_TRUE(m.contains(ClassAssertion{Principle(), ind("p")}));
}

TEST(Reasoner, SubClassAndClassEquivalence) {
    OntologyStore s = seed_with({"bias", "s1"});
    s.add(ClassAssertion{aieo("Risk_keyword"), ind("bias")});
    s.add(ClassAssertion{UseCase(), ind("s1")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(m.contains(ClassAssertion{Keyword(), ind("bias")}));
    EXPECT_TRUE(m.contains(ClassAssertion{Scenario(), ind("s1")}));
    EXPECT_TRUE(m.contains(ClassAssertion{Application(), ind("s1")}));
}

TEST(Reasoner, PropertyEquivalenceAndSubProperty) {
    OntologyStore s = seed_with({"p", "x", "k"});
    s.add(ObjectPropertyAssertion{ind("p"), application(), ind("x")});
    s.add(ObjectPropertyAssertion{ind("p"), relevantKeyword(), ind("k")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(m.contains(ObjectPropertyAssertion{ind("p"), useCase(), ind("x")}));
    EXPECT_TRUE(m.contains(ObjectPropertyAssertion{ind("p"), scenario(), ind("x")}));
    EXPECT_TRUE(m.contains(ObjectPropertyAssertion{ind("p"), keyword(), ind("k")}));
    const auto traces = explain(m, ObjectPropertyAssertion{ind("p"), keyword(), ind("k")});
    ASSERT_EQ(traces.size(), 1u);
    EXPECT_EQ(traces.front().rule, RuleId::SubProperty);
}

TEST(Reasoner, SameIndividualCarriesFactsAndIsTransitive) {
    OntologyStore s = seed_with({"a", "b", "c", "f"});
    s.add(make_same(ind("a"), ind("b")));
    s.add(make_same(ind("b"), ind("c")));
    s.add(ClassAssertion{Principle(), ind("a")});
    s.add(ObjectPropertyAssertion{ind("f"), principle(), ind("c")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(m.contains(make_same(ind("a"), ind("c"))));
    EXPECT_TRUE(m.contains(ClassAssertion{Principle(), ind("c")}));
    EXPECT_TRUE(m.contains(ObjectPropertyAssertion{ind("f"), principle(), ind("a")}));
    EXPECT_EQ(m.same_as(ind("a")), (std::set<Iri>{ind("b"), ind("c")}));
}

TEST(Reasoner, TracesUnwindToAssertedAxioms) {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        const OntologyStore s = testing::random_store_over_seed(rng);
        const Materialization m = materialize(s);
        for (const auto& fact : m.inferred()) {
            const auto it = m.traces().find(fact);
            ASSERT_NE(it, m.traces().end());
            ASSERT_FALSE(it->second.empty());
            for (const auto& t : it->second) {
                EXPECT_EQ(t.conclusion, fact);
                for (const auto& p : t.premises) EXPECT_TRUE(m.is_asserted(p) || m.inferred().count(p));
            }
        }
    }
}

TEST(Reasoner, ExplainContract) {
    OntologyStore s = seed_with({"x", "y"});
    s.add(ObjectPropertyAssertion{ind("x"), keyword(), ind("y")});
    const Materialization m = materialize(s);
    EXPECT_TRUE(explain(m, ObjectPropertyAssertion{ind("x"), keyword(), ind("y")}).empty());
    EXPECT_FALSE(explain(m, ClassAssertion{Keyword(), ind("y")}).empty());
    expect_code(ErrorCode::UnknownFact, [&] { explain(m, ClassAssertion{Keyword(), ind("x")}); });
}

TEST(Reasoner, NoTypesWithoutDomainAxioms) {
    std::mt19937 rng(23);
    testing::RandomStoreOptions opt;
    opt.maxExtraSchema = 0;
    opt.sameAsWeight = 0.0;
    for (int i = 0; i < 50; ++i) {
        const OntologyStore s = testing::random_store_over_seed(rng, opt);
        const Materialization m = materialize(s);
        std::set<Iri> typed;
        for (const auto& ca : s.all<ClassAssertion>()) typed.insert(ca.individual);
        for (const auto& pa : m.property_assertions()) typed.insert(pa.object);
        for (const auto& ca : m.class_assertions()) EXPECT_TRUE(typed.count(ca.individual)) << ca.individual.str();
    }
}

TEST(Reasoner, SemiNaiveEqualsNaive) {
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
        const OntologyStore s = testing::random_store_over_seed(rng);
        const Materialization m = materialize(s);
        ASSERT_EQ(testing::closure_of(m), testing::naive_closure(s)) << "store " << i;
    }
}

TEST(Reasoner, MaterializationIsIdempotent) {
    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        const Materialization m = materialize(testing::random_store_over_seed(rng));
        const Materialization again = materialize(m.to_store());
        EXPECT_TRUE(again.inferred().empty());
    }
}

TEST(Reasoner, AddingAnAxiomNeverRemovesAFact) {
    std::mt19937 rng(37);
    for (int i = 0; i < 30; ++i) {
        OntologyStore s = testing::random_store_over_seed(rng);
        const auto before = testing::closure_of(materialize(s));
        const auto inds = s.entities(EntityKind::NamedIndividual);
        s.add(ClassAssertion{UseCase(), inds.front()});
        const auto after = testing::closure_of(materialize(s));
        EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
}

TEST(Consistency, FrameworkAndPrincipleIsOneViolation) {
    OntologyStore s = seed_with({"x"});
    s.add(ClassAssertion{Framework(), ind("x")});
    s.add(ClassAssertion{Principle(), ind("x")});
    const Materialization m = materialize(s);
    ASSERT_EQ(m.violations().size(), 1u);
    EXPECT_EQ(m.violations().front().rule, RuleId::DisjointTyping);
    EXPECT_EQ(m.violations(), check_consistency(m));
}

TEST(Consistency, PrincipleAndRequirementAreCompatible) {
    OntologyStore s = seed_with({"au", "eu"});
    s.add(ClassAssertion{Principle(), ind("au")});
    s.add(ClassAssertion{Requirement(), ind("eu")});
    s.add(make_same(ind("au"), ind("eu")));
    EXPECT_TRUE(materialize(s).consistent());
}

TEST(Consistency, MergingThroughSameAsIsD2) {
    OntologyStore s = seed_with({"a", "b"});
    s.add(ClassAssertion{Framework(), ind("a")});
    s.add(ClassAssertion{Principle(), ind("b")});
    s.add(make_same(ind("a"), ind("b")));
    const Materialization m = materialize(s);
    ASSERT_EQ(m.violations().size(), 2u);
    for (const auto& v : m.violations()) EXPECT_EQ(v.rule, RuleId::SameAsDisjoint);
}

TEST(Consistency, EveryDisjointPairIsDetected) {
    const auto pairs = testing::expected_disjoint_pairs();
    const auto classes = seed_aieo_schema().entities(EntityKind::OwlClass);
    for (const auto& a : classes) {
        for (const auto& b : classes) {
            if (!(a < b)) continue;
            OntologyStore s = seed_with({"x"});
            s.add(ClassAssertion{a, ind("x")});
            s.add(ClassAssertion{b, ind("x")});
            const Materialization m = materialize(s);
            const bool disjoint = std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end();
            EXPECT_EQ(m.violations().size(), disjoint ? 1u : 0u) << a.str() << " " << b.str();
        }
    }
}

TEST(Consistency, ReportedIffBothMembershipsHold) {
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        const OntologyStore s = testing::random_store_over_seed(rng);
        const Materialization m = materialize(s);
        const auto closure = testing::naive_closure(s);
        std::set<std::tuple<Iri, Iri, Iri>> expected;
        for (const auto& d : s.all<DisjointClasses>()) {
            for (const auto& x : s.entities(EntityKind::NamedIndividual)) {
                if (closure.count(ClassAssertion{d.first, x}) && closure.count(ClassAssertion{d.second, x}))
                    expected.insert({x, d.first, d.second});
            }
        }
        std::set<std::tuple<Iri, Iri, Iri>> got;
        for (const auto& v : m.violations()) got.insert({v.individual, v.classA, v.classB});
        EXPECT_EQ(got, expected);
    }
}

TEST(Equivalence, ClassesPartitionDeclaredIris) {
    const auto blocks = equivalence_classes(seed_aieo_schema(), EquivalenceKind::Class);
    EXPECT_EQ(blocks.size(), 17u);
    const auto props = equivalence_classes(seed_aieo_schema(), EquivalenceKind::Property);
    EXPECT_EQ(props.size(), 8u);
}

TEST(Reasoner, IterationLimit) {
    OntologyStore s = seed_with({"x", "y"});
    s.add(ObjectPropertyAssertion{ind("x"), application(), ind("y")});
    ReasonerOptions opt;
    opt.maxDerivedFacts = 1;
    expect_code(ErrorCode::IterationLimitExceeded, [&] { materialize(s, opt); });
}

}  // namespace
}  // namespace aieo
