#include "aieo/seed.hpp"
#include "aieo/store.hpp"
#include "aieo/vocabulary.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace aieo {
namespace {

using namespace vocab;

Iri ind(const char* local) { return aieo(local); }

using testing::expect_code;

TEST(Iri, RejectsRelativeAndEmpty) {
    EXPECT_THROW(Iri("Fairness"), Error);
    EXPECT_THROW(Iri(""), Error);
    EXPECT_EQ(Iri("https://w3id.org/aieo#Fairness").local_name(), "Fairness");
}

TEST(PrefixMap, ExpandAndCompactAreInverse) {
    const PrefixMap px = PrefixMap::standard();
    EXPECT_EQ(px.expand("aieo:Principle"), Principle());
    EXPECT_EQ(px.expand("<https://w3id.org/aieo#Principle>"), Principle());
    EXPECT_EQ(px.compact(Principle()), "aieo:Principle");
    EXPECT_EQ(px.compact(Iri("http://example.org/x/y")), "<http://example.org/x/y>");
    EXPECT_FALSE(px.try_expand("nope:x").has_value());
    for (const auto& cls : seed_aieo_schema().entities(EntityKind::OwlClass)) {
        EXPECT_EQ(px.expand(px.compact(cls)), cls);
    }
}

TEST(Store, DeclareIsIdempotent) {
    OntologyStore s;
    EXPECT_TRUE(s.declare(ind("Fairness"), EntityKind::NamedIndividual));
    EXPECT_EQ(s.size(), 1u);
    OntologyStore copy = s;
    EXPECT_FALSE(s.declare(ind("Fairness"), EntityKind::NamedIndividual));
    EXPECT_TRUE(s.same_axioms(copy));
}

TEST(Store, PunningIsAKindConflict) {
    OntologyStore s;
    s.declare(ind("Fairness"), EntityKind::NamedIndividual);
    expect_code(ErrorCode::KindConflict, [&] { s.declare(ind("Fairness"), EntityKind::OwlClass); });
    // Oracle: one declaration per IRI.
    std::map<Iri, int> seen;
    for (const auto& d : s.all<Declaration>()) ++seen[d.iri];
    for (const auto& [iri, n] : seen) EXPECT_EQ(n, 1) << iri.str();
}

TEST(Store, AddClassAssertionGrowsLogicalAxioms) {
    OntologyStore s = seed_aieo_schema();
    s.declare(ind("AU_Fairness"), EntityKind::NamedIndividual);
    const auto before = compute_metrics(s);
    EXPECT_TRUE(s.add(ClassAssertion{Principle(), ind("AU_Fairness")}));
    EXPECT_EQ(compute_metrics(s).logicalAxiomCount, before.logicalAxiomCount + 1);
    EXPECT_FALSE(s.add(ClassAssertion{Principle(), ind("AU_Fairness")}));
    EXPECT_EQ(compute_metrics(s).logicalAxiomCount, before.logicalAxiomCount + 1);
}

TEST(Store, UndeclaredPropertyIsRejected) {
    OntologyStore s = seed_aieo_schema();
    s.declare(ind("a"), EntityKind::NamedIndividual);
    s.declare(ind("b"), EntityKind::NamedIndividual);
    const Iri undeclared = aieo("mentions");
    EXPECT_FALSE(s.kind_of(undeclared).has_value());
    expect_code(ErrorCode::UndeclaredEntity, [&] { s.add(ObjectPropertyAssertion{ind("a"), undeclared, ind("b")}); });
}

TEST(Store, RangeNamingAnIndividualIsAKindMismatch) {
    OntologyStore s = seed_aieo_schema();
    s.declare(ind("a"), EntityKind::NamedIndividual);
    expect_code(ErrorCode::KindMismatch, [&] { s.add(ObjectPropertyRange{keyword(), ind("a")}); });
}

TEST(Store, DegenerateAxiomsAreRejected) {
    OntologyStore s = seed_aieo_schema();
    s.declare(ind("a"), EntityKind::NamedIndividual);
    expect_code(ErrorCode::ValidationError, [&] { s.add(make_disjoint(Principle(), Principle())); });
    expect_code(ErrorCode::ValidationError, [&] { s.add(make_same(ind("a"), ind("a"))); });
    expect_code(ErrorCode::ValidationError, [&] { s.add(make_equivalent_classes({Principle(), Principle()})); });
    expect_code(ErrorCode::ValidationError, [&] { s.add(AnnotationAssertion{ind("a"), label(), {"", std::nullopt}}); });
}

TEST(Store, UnorderedPairsAreNormalized) {
    OntologyStore s = seed_aieo_schema();
    s.declare(ind("a"), EntityKind::NamedIndividual);
    s.declare(ind("b"), EntityKind::NamedIndividual);
    s.add(SameIndividual{ind("b"), ind("a")});
    EXPECT_FALSE(s.add(SameIndividual{ind("a"), ind("b")}));
    EXPECT_TRUE(s.contains(make_same(ind("a"), ind("b"))));
    EXPECT_TRUE(s.contains(DisjointClasses{Principle(), Framework()}));
}

TEST(Store, IndexesAgreeAfterRandomMutations) {
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        const OntologyStore s = testing::random_store(rng, 60);
        EXPECT_TRUE(s.indexes_consistent());
        EXPECT_NO_THROW(s.validate());
    }
}

TEST(Seed, SchemaLevelCounts) {
    const MetricsReport m = compute_metrics(seed_aieo_schema());
    EXPECT_EQ(m.classCount, 19u);
    EXPECT_EQ(m.objectPropertyCount, 10u);
    EXPECT_EQ(m.annotationPropertyCount, 4u);
    EXPECT_EQ(m.dataPropertyCount, 0u);
    EXPECT_EQ(m.individualCount, 0u);
}

TEST(Seed, DisjointnessMatrixMatchesClassTable) {
    const OntologyStore s = seed_aieo_schema();
    const auto expected = testing::expected_disjoint_pairs();
    EXPECT_EQ(expected.size(), 9u);
    const auto classes = s.entities(EntityKind::OwlClass);
    ASSERT_EQ(classes.size(), 19u);
    for (const auto& a : classes) {
        for (const auto& b : classes) {
            const bool want = std::find(expected.begin(), expected.end(), std::pair<Iri, Iri>(std::minmax(a, b))) != expected.end();
            const bool have = a != b && s.contains(make_disjoint(a, b));
            EXPECT_EQ(have, want) << a.str() << " / " << b.str();
        }
    }
    EXPECT_TRUE(s.contains(make_disjoint(Framework(), Principle())));
    EXPECT_FALSE(s.contains(make_disjoint(Principle(), Requirement())));
}

TEST(Seed, EveryPropertyHasOneRangeAndNoDomain) {
    const OntologyStore s = seed_aieo_schema();
    for (const auto& p : s.entities(EntityKind::ObjectProperty)) {
        int ranges = 0;
        for (const auto& r : s.all<ObjectPropertyRange>()) ranges += r.property == p;
        EXPECT_EQ(ranges, 1) << p.str();
    }
    EXPECT_TRUE(s.all<ObjectPropertyDomain>().empty());
}

TEST(Seed, KeywordHierarchyAndEquivalences) {
    const OntologyStore s = seed_aieo_schema();
    EXPECT_EQ(s.all<SubClassOf>().size(), 9u);
    for (const auto& k : keyword_subclasses()) EXPECT_TRUE(s.contains(SubClassOf{k, Keyword()})) << k.str();
    EXPECT_TRUE(s.contains(make_equivalent_classes({Application(), UseCase(), Scenario()})));
    EXPECT_TRUE(s.contains(make_equivalent_properties({application(), scenario(), useCase()})));
    EXPECT_TRUE(s.contains(SubObjectPropertyOf{relevantKeyword(), keyword()}));
    EXPECT_TRUE(s.contains(ObjectPropertyRange{requirement(), Requirement()}));
    EXPECT_EQ(s.annotations(Requirement(), label()).front().text, "Requirements");
}

TEST(Metrics, EmptyStoreIsAllZero) { EXPECT_EQ(compute_metrics(OntologyStore{}), MetricsReport{}); }

TEST(Metrics, TwoNewIndividuals) {
    OntologyStore s = seed_aieo_schema();
    const auto before = compute_metrics(s);
    for (const char* n : {"x", "y"}) {
        s.declare(ind(n), EntityKind::NamedIndividual);
        s.add(ClassAssertion{Principle(), ind(n)});
    }
    const auto after = compute_metrics(s);
    EXPECT_EQ(after.individualCount, 2u);
    EXPECT_EQ(after.logicalAxiomCount, before.logicalAxiomCount + 2);
    EXPECT_EQ(after, testing::hand_tally(s));
}

TEST(Metrics, MatchesHandTallyOnRandomStores) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const OntologyStore s = testing::random_store(rng, 50);
        const auto m = compute_metrics(s);
        EXPECT_EQ(m, testing::hand_tally(s));
        EXPECT_EQ(m.axiomCount, m.logicalAxiomCount + m.declarationAxiomCount + m.annotationAssertionCount);
    }
}

TEST(Metrics, TableUsesProtegeRowLabels) {
    const std::string table = format_metrics_table(compute_metrics(seed_aieo_schema()));
    EXPECT_NE(table.find("Class count"), std::string::npos);
    EXPECT_NE(table.find("Object property count"), std::string::npos);
    EXPECT_NE(table.find("Annotation property count"), std::string::npos);
}

}  // namespace
}  // namespace aieo
