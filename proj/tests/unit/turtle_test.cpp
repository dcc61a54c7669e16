#include "aieo/seed.hpp"
#include "aieo/turtle.hpp"
#include "aieo/vocabulary.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace aieo {
namespace {

using namespace vocab;

const char* kHeader =
    "@prefix aieo: <https://w3id.org/aieo#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";

ParseDiagnostic first_error(const std::string& text, ErrorCode expected) {
    try {
        parse_turtle(text);
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), expected) << e.what();
        EXPECT_FALSE(e.diagnostics().empty());
        return e.diagnostics().front();
    }
    ADD_FAILURE() << "parse succeeded";
    return {};
}

// 1-based position of the first occurrence of `needle`.
std::pair<int, int> position_of(const std::string& text, const std::string& needle) {
    const auto offset = text.find(needle);
    return line_column_at(text, offset);
}

TEST(Turtle, EmptyDocumentIsEmptyStore) {
    EXPECT_TRUE(parse_turtle("").empty());
    EXPECT_TRUE(parse_turtle("  # only a comment\n").empty());
}

TEST(Turtle, KeywordTripleBecomesPropertyAssertion) {
    const std::string doc = std::string(kHeader) +
                            "aieo:keyword a owl:ObjectProperty .\n"
                            "aieo:fairness a owl:NamedIndividual .\n"
                            "aieo:AI_system a owl:NamedIndividual .\n"
                            "aieo:fairness aieo:keyword aieo:AI_system .\n";
    const OntologyStore s = parse_turtle(doc);
    EXPECT_TRUE(s.contains(ObjectPropertyAssertion{aieo("fairness"), keyword(), aieo("AI_system")}));
    EXPECT_EQ(s.size(), 4u);
}

TEST(Turtle, BlankNodesAreUnsupportedAtTheirPosition) {
    for (const std::string construct : {"[ ]", "_:b0"}) {
        const std::string doc = std::string(kHeader) + "aieo:x a owl:NamedIndividual .\n" +
                                "aieo:x aieo:keyword " + construct + " .\n";
        const auto d = first_error(doc, ErrorCode::UnsupportedFeature);
        const auto [line, column] = position_of(doc, construct);
        EXPECT_EQ(d.line, line) << construct;
        EXPECT_EQ(d.column, column) << construct;
    }
}

TEST(Turtle, OutOfSubsetConstructs) {
    const std::string base = std::string(kHeader) + "aieo:x a owl:NamedIndividual .\n";
    for (const std::string tail : {"aieo:x rdfs:label \"v\"^^<http://www.w3.org/2001/XMLSchema#string> .",
                                   "aieo:x rdfs:label 42 .", "aieo:x rdfs:label true .",
                                   "aieo:x rdfs:label \"\"\"long\"\"\" .", "@base <http://example.org/> .",
                                   "aieo:x aieo:keyword ( aieo:x ) ."}) {
        first_error(base + tail + "\n", ErrorCode::UnsupportedFeature);
    }
}

TEST(Turtle, SyntaxErrorsCarryPositions) {
    const std::string doc = std::string(kHeader) + "aieo:x a owl:NamedIndividual\n";
    const auto d = first_error(doc, ErrorCode::SyntaxError);
    EXPECT_GE(d.line, 4);
    first_error("ex:x a ex:Y .\n", ErrorCode::SyntaxError);  // undeclared prefix
}

TEST(Turtle, UndeclaredEntitiesFollowStoreRules) {
    const std::string doc = std::string(kHeader) + "aieo:x a owl:NamedIndividual .\naieo:x aieo:keyword aieo:y .\n";
    const auto d = first_error(doc, ErrorCode::UndeclaredEntity);
    EXPECT_EQ(d.line, 5);
}

TEST(Turtle, OntologyHeaderIsIgnoredWithWarning) {
    const std::string doc = std::string(kHeader) + "<https://w3id.org/aieo> a owl:Ontology .\n";
    const auto r = parse_turtle_with_warnings(doc);
    EXPECT_TRUE(r.store.empty());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_EQ(r.warnings.front().severity, Severity::Warning);
}

TEST(Turtle, EmptyStoreSerializesToPrefixHeaderOnly) {
    const std::string out = serialize_turtle(OntologyStore{});
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            EXPECT_EQ(line.rfind("@prefix ", 0), 0u) << line;
        }
    }
}

TEST(Turtle, SeedRoundTripsExactly) {
    const OntologyStore seed = seed_aieo_schema();
    const std::string text = serialize_turtle(seed);
    const OntologyStore back = parse_turtle(text);
    EXPECT_TRUE(back.same_axioms(seed));
    EXPECT_EQ(serialize_turtle(back), text);
    EXPECT_EQ(serialize_turtle(seed), text);
}

TEST(Turtle, RandomStoresRoundTrip) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const OntologyStore s = i % 2 ? testing::random_store(rng, 60) : testing::random_store_over_seed(rng);
        const std::string text = serialize_turtle(s);
        const OntologyStore back = parse_turtle(text);
        ASSERT_TRUE(back.same_axioms(s)) << text;
        EXPECT_EQ(serialize_turtle(back), text);
    }
}

TEST(Turtle, PredicateOrderIsFixed) {
    OntologyStore s = seed_aieo_schema();
    const std::string text = serialize_turtle(s);
    const auto block = text.substr(text.find("aieo:Application a"));
    const auto sub = block.find("owl:equivalentClass");
    EXPECT_NE(sub, std::string::npos);
    const auto principle = text.substr(text.find("\naieo:Principle a"));
    EXPECT_LT(principle.find("owl:Class"), principle.find("owl:disjointWith"));
}

TEST(Turtle, LiteralsWithEscapesAndLanguageTags) {
    OntologyStore s = seed_aieo_schema();
    s.declare(aieo("x"), EntityKind::NamedIndividual);
    s.add(AnnotationAssertion{aieo("x"), label(), {"say \"hi\"\nback\\slash\ttab", "en-AU"}});
    s.add(AnnotationAssertion{aieo("x"), shortDescription(), {"équité", std::nullopt}});
    EXPECT_TRUE(parse_turtle(serialize_turtle(s)).same_axioms(s));
}

TEST(Turtle, NaryEquivalenceFromOneObjectList) {
    const std::string doc = std::string(kHeader) +
                            "aieo:A a owl:Class .\naieo:B a owl:Class .\naieo:C a owl:Class .\n"
                            "aieo:A owl:equivalentClass aieo:B , aieo:C .\n";
    const OntologyStore s = parse_turtle(doc);
    EXPECT_TRUE(s.contains(make_equivalent_classes({aieo("A"), aieo("B"), aieo("C")})));
    EXPECT_EQ(s.all<EquivalentClasses>().size(), 1u);
}

}  // namespace
}  // namespace aieo
