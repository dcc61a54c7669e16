#include "aieo/interchange.hpp"
#include "aieo/pipeline_config.hpp"
#include "aieo/seed.hpp"
#include "aieo/vocabulary.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace aieo {
namespace {

using testing::expect_code;

TEST(Interchange, SeedRoundTrip) {
    const OntologyStore seed = seed_aieo_schema();
    const std::string text = serialize_interchange(seed);
    EXPECT_TRUE(parse_interchange(text).same_axioms(seed));
    EXPECT_EQ(serialize_interchange(parse_interchange(text)), text);
}

TEST(Interchange, RandomRoundTrip) {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        const OntologyStore s = testing::random_store(rng, 60);
        EXPECT_TRUE(parse_interchange(serialize_interchange(s)).same_axioms(s));
    }
}

TEST(Interchange, FieldNamesFollowTheAxiomUnion) {
    const std::string text = serialize_interchange(seed_aieo_schema());
    for (const char* field : {"\"kind\": \"SubClassOf\"", "\"sub\"", "\"sup\"", "\"entityKind\"", "\"classes\"",
                              "\"properties\"", "\"prop\"", "\"cls\"", "\"annProp\""}) {
        EXPECT_NE(text.find(field), std::string::npos) << field;
    }
}

TEST(Interchange, BadDocuments) {
    expect_code(ErrorCode::SyntaxError, [] { parse_interchange("{\"axioms\": ["); });
    expect_code(ErrorCode::SchemaViolation, [] { parse_interchange(R"({"axioms": [{"kind": "Nope"}]})"); });
    expect_code(ErrorCode::SchemaViolation, [] { parse_interchange(R"({"axioms": [{"kind": "SubClassOf", "sub": "aieo:A"}]})"); });
    expect_code(ErrorCode::UndeclaredEntity,
                [] { parse_interchange(R"({"axioms": [{"kind": "SubClassOf", "sub": "aieo:A", "sup": "aieo:B"}]})"); });
}

TEST(Config, MinimalConfigGetsDefaults) {
    const PipelineConfig cfg = parse_config(R"({"frameworkId": "aieo:AU", "title": "AU"})");
    EXPECT_EQ(cfg.frameworkId, vocab::aieo("AU"));
    EXPECT_EQ(cfg.extraction.minTokenLength, 3);
    EXPECT_EQ(cfg.extraction.topK, 10);
    EXPECT_EQ(cfg.extraction.relevantTopK, 3);
    EXPECT_EQ(cfg.extraction.stopwords, default_stopwords());
    EXPECT_DOUBLE_EQ(cfg.similarityThreshold, 0.5);
    EXPECT_TRUE(cfg.classification.empty());
}

TEST(Config, ClassificationEntry) {
    const PipelineConfig cfg =
        parse_config(R"({"frameworkId": "aieo:AU", "title": "AU", "classification": {"Bias": "aieo:Risk_keyword"}})");
    ASSERT_EQ(cfg.classification.count("bias"), 1u);
    EXPECT_EQ(cfg.classification.at("bias"), vocab::aieo("Risk_keyword"));
}

TEST(Config, NonKeywordTargetIsRejected) {
    // Oracle: the target must be one of the seed's subclasses of Keyword.
    const OntologyStore seed = seed_aieo_schema();
    EXPECT_FALSE(seed.contains(SubClassOf{vocab::Principle(), vocab::Keyword()}));
    expect_code(ErrorCode::SchemaViolation, [] {
        parse_config(R"({"frameworkId": "aieo:AU", "title": "AU", "classification": {"bias": "aieo:Principle"}})");
    });
    expect_code(ErrorCode::SchemaViolation, [] {
        parse_config(R"({"frameworkId": "aieo:AU", "title": "AU", "classification": {"bias": "aieo:Keyword"}})");
    });
}

TEST(Config, ViolationsNameTheField) {
    auto message_of = [](const char* text) -> std::string {
        try {
            parse_config(text);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::SchemaViolation);
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message_of(R"({"title": "x"})").find("frameworkId"), std::string::npos);
    EXPECT_NE(message_of(R"({"frameworkId": "aieo:AU", "title": "x", "extraction": {"topK": 0}})").find("topK"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"frameworkId": "aieo:AU", "title": "x", "extraction": {"topK": 2, "relevantTopK": 3}})")
                  .find("relevantTopK"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"frameworkId": "aieo:AU", "title": "x", "colour": 1})").find("colour"), std::string::npos);
    EXPECT_NE(message_of(R"({"frameworkId": "aieo:AU", "title": "x", "similarityThreshold": 0})").find("similarityThreshold"),
              std::string::npos);
}

TEST(Config, RelevantTopKDefaultsToTopKWhenSmaller) {
    const auto cfg = parse_config(R"({"frameworkId": "aieo:AU", "title": "x", "extraction": {"topK": 2}})");
    EXPECT_EQ(cfg.extraction.relevantTopK, 2);
}

TEST(Config, EquivalenceDecisions) {
    const auto cfg = parse_config(R"({"frameworkId": "aieo:EU", "title": "x", "equivalences": [
        {"left": "aieo:EU_Fairness", "right": "aieo:AU_Fairness"},
        {"left": "aieo:EU_A", "right": "aieo:AU_B", "status": "rejected"}]})");
    ASSERT_EQ(cfg.equivalences.size(), 2u);
    EXPECT_EQ(cfg.equivalences[0].status, ProposalStatus::Confirmed);
    EXPECT_EQ(cfg.equivalences[1].status, ProposalStatus::Rejected);
}

TEST(Config, MalformedJsonIsASyntaxError) {
    try {
        parse_config("{\n  \"frameworkId\": \n}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.diagnostics().front().line, 3);
    }
}

}  // namespace
}  // namespace aieo
