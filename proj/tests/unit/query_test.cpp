#include "aieo/query.hpp"
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

// Two frameworks, three principles, an equivalence and a scenario.
OntologyStore federated() {
    OntologyStore s = seed_aieo_schema();
    for (const char* n : {"AU", "EU", "AU_Fairness", "EU_Fairness", "AU_Contestability", "EU_Accountability",
                          "AU_Accountability", "hiring", "loan"}) {
        s.declare(ind(n), EntityKind::NamedIndividual);
    }
    s.add(ClassAssertion{Framework(), ind("AU")});
    s.add(ClassAssertion{Framework(), ind("EU")});
    s.add(ObjectPropertyAssertion{ind("AU"), principle(), ind("AU_Fairness")});
    s.add(ObjectPropertyAssertion{ind("AU"), principle(), ind("AU_Contestability")});
    s.add(ObjectPropertyAssertion{ind("AU"), principle(), ind("AU_Accountability")});
    s.add(ObjectPropertyAssertion{ind("EU"), principle(), ind("EU_Fairness")});
    s.add(ObjectPropertyAssertion{ind("EU"), requirement(), ind("EU_Accountability")});
    s.add(make_same(ind("AU_Fairness"), ind("EU_Fairness")));
    s.add(make_same(ind("AU_Accountability"), ind("EU_Accountability")));
    s.add(AnnotationAssertion{ind("AU_Fairness"), shortDescription(), {"AU text", std::nullopt}});
    s.add(AnnotationAssertion{ind("EU_Fairness"), shortDescription(), {"EU text", std::nullopt}});
    s.add(AnnotationAssertion{ind("EU_Fairness"), reference(), {"EU ref", std::nullopt}});
    s.add(AnnotationAssertion{ind("AU_Accountability"), reference(), {"AU ref", std::nullopt}});
    s.add(AnnotationAssertion{ind("EU_Accountability"), reference(), {"EU acc ref", std::nullopt}});
    s.add(ObjectPropertyAssertion{ind("EU_Fairness"), application(), ind("hiring")});
    s.add(ObjectPropertyAssertion{ind("AU_Fairness"), example(), ind("loan")});
    return s;
}

TEST(QueryParse, MinimalQuery) {
    const Query q = parse_query("SELECT ?p WHERE { ?p a aieo:Principle }");
    EXPECT_EQ(q.patterns.size(), 1u);
    EXPECT_EQ(q.projected, std::vector<std::string>{"p"});
    EXPECT_EQ(std::get<Iri>(q.patterns[0].predicate), rdf_type());
}

TEST(QueryParse, JoinedPatterns) {
    const Query q = parse_query("SELECT ?f ?p WHERE { ?f a aieo:Framework . ?f aieo:principle ?p }");
    EXPECT_EQ(q.patterns.size(), 2u);
    EXPECT_EQ(q.projected, (std::vector<std::string>{"f", "p"}));
    EXPECT_TRUE(q.warnings.empty());
}

TEST(QueryParse, PrefixDistinctStarAndLiterals) {
    const Query q = parse_query(
        "PREFIX ex: <http://example.org/> SELECT DISTINCT * WHERE { ?x ex:p ?y . ?x rdfs:label \"Fairness\"@en . }");
    EXPECT_TRUE(q.distinct);
    EXPECT_EQ(q.projected, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(std::get<AnnotationValue>(q.patterns[1].object), (AnnotationValue{"Fairness", "en"}));
}

TEST(QueryParse, OutOfSubsetFeatures) {
    // Oracle: a keyword scan of the text.
    for (const char* text : {"SELECT ?p WHERE { ?p a aieo:Principle OPTIONAL { ?p aieo:keyword ?k } }",
                             "SELECT ?p WHERE { ?p a aieo:Principle FILTER(?p != aieo:x) }",
                             "SELECT ?p WHERE { { ?p a aieo:Principle } UNION { ?p a aieo:Requirement } }",
                             "SELECT ?p WHERE { ?p aieo:keyword/aieo:keyword ?k }",
                             "SELECT ?p WHERE { ?p aieo:keyword* ?k }",
                             "SELECT ?p WHERE { ?p a aieo:Principle } LIMIT 3"}) {
        expect_code(ErrorCode::UnsupportedFeature, [&] { parse_query(text); });
    }
}

TEST(QueryParse, SyntaxErrorsHavePositions) {
    try {
        parse_query("SELECT ?q WHERE { ?p a aieo:Principle }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.diagnostics().front().column, 8);
    }
    expect_code(ErrorCode::SyntaxError, [] { parse_query("SELECT ?p WHERE { ?p a }"); });
    expect_code(ErrorCode::SyntaxError, [] { parse_query("SELECT ?p WHERE { ?p a nope:x }"); });
    expect_code(ErrorCode::SyntaxError, [] { parse_query("SELECT ?p { ?p a aieo:Principle"); });
}

TEST(QueryParse, DisconnectedPatternWarns) {
    const Query q = parse_query("SELECT ?p WHERE { ?p a aieo:Principle . ?x a aieo:Framework }");
    EXPECT_EQ(q.warnings.size(), 1u);
}

TEST(QueryEval, EmptyStoreGivesNoRows) {
    const auto rs = evaluate(parse_query("SELECT ?p WHERE { ?p a aieo:Principle }"), materialize(OntologyStore{}));
    EXPECT_TRUE(rs.rows.empty());
    EXPECT_EQ(rs.variables, std::vector<std::string>{"p"});
}

TEST(QueryEval, UseCaseSeesApplicationAndScenarioAssertions) {
    OntologyStore s = seed_aieo_schema();
    for (const char* n : {"x", "a", "b", "c"}) s.declare(ind(n), EntityKind::NamedIndividual);
    s.add(ObjectPropertyAssertion{ind("x"), application(), ind("a")});
    s.add(ObjectPropertyAssertion{ind("x"), scenario(), ind("b")});
    s.add(ObjectPropertyAssertion{ind("x"), useCase(), ind("c")});
    const Query q = parse_query("SELECT ?s WHERE { ?x aieo:useCase ?s }");
    const auto rs = evaluate(q, materialize(s));
    EXPECT_EQ(rs.rows.size(), 3u);
    EXPECT_EQ(rs, testing::brute_force_evaluate(q, testing::naive_triples(s)));
}

TEST(QueryEval, EqualsBruteForceOnRandomInputs) {
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        const OntologyStore s = testing::random_store_over_seed(rng);
        const Query q = testing::random_query(rng, s);
        ASSERT_EQ(evaluate(q, materialize(s)), testing::brute_force_evaluate(q, testing::naive_triples(s)))
            << "case " << i;
    }
}

TEST(QueryEval, RowsAreSortedAndDistinct) {
    const Materialization m = materialize(federated());
    const auto rs = evaluate(parse_query("SELECT DISTINCT ?f WHERE { ?f aieo:principle ?p }"), m);
    EXPECT_TRUE(std::is_sorted(rs.rows.begin(), rs.rows.end()));
    EXPECT_EQ(rs.rows.size(), 2u);
    const auto all = evaluate(parse_query("SELECT ?f WHERE { ?f aieo:principle ?p }"), m);
    EXPECT_GT(all.rows.size(), rs.rows.size());
}

TEST(QueryEval, SerializationIsDeterministic) {
    const Materialization m = materialize(federated());
    const auto q = parse_query("SELECT ?f ?p WHERE { ?f a aieo:Framework . ?f aieo:principle ?p }");
    const PrefixMap px = PrefixMap::standard();
    EXPECT_EQ(to_tsv(evaluate(q, m), px), to_tsv(evaluate(q, m), px));
    EXPECT_EQ(to_json(evaluate(q, m), px), to_json(evaluate(q, m), px));
    const std::string tsv = to_tsv(evaluate(q, m), px);
    EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "?f\t?p");
}

TEST(Canned, Names) {
    for (auto q : {CannedQuery::PrinciplesByFramework, CannedQuery::DescribeConcept, CannedQuery::ScenariosFor,
                   CannedQuery::UniqueConcepts}) {
        EXPECT_EQ(canned_query_from_string(to_string(q)), q);
    }
    EXPECT_FALSE(canned_query_from_string("everything").has_value());
}

TEST(Canned, DescribeConceptSpansFrameworks) {
    const Materialization m = materialize(federated());
    const auto rs = canned_query(CannedQuery::DescribeConcept, ind("AU_Fairness"), m);
    std::set<Term> frameworks;
    for (const auto& row : rs.rows) frameworks.insert(row[0]);
    EXPECT_EQ(frameworks, (std::set<Term>{ind("AU"), ind("EU")}));
    EXPECT_EQ(rs.rows.size(), 3u);

    const auto acc = canned_query(CannedQuery::DescribeConcept, ind("AU_Accountability"), m);
    std::set<Term> accFrameworks;
    for (const auto& row : acc.rows) accFrameworks.insert(row[0]);
    EXPECT_EQ(accFrameworks, (std::set<Term>{ind("AU"), ind("EU")}));
}

TEST(Canned, ArgumentErrors) {
    const Materialization m = materialize(federated());
    expect_code(ErrorCode::MissingArgument, [&] { canned_query(CannedQuery::DescribeConcept, std::nullopt, m); });
    expect_code(ErrorCode::MissingArgument, [&] { canned_query(CannedQuery::ScenariosFor, std::nullopt, m); });
    expect_code(ErrorCode::UnknownConcept, [&] { canned_query(CannedQuery::DescribeConcept, ind("Nobody"), m); });
}

TEST(Canned, UniqueConcepts) {
    const Materialization m = materialize(federated());
    const auto au = canned_query(CannedQuery::UniqueConcepts, ind("AU"), m);
    ASSERT_EQ(au.rows.size(), 1u);
    EXPECT_EQ(au.rows[0][1], Term{ind("AU_Contestability")});
    EXPECT_TRUE(canned_query(CannedQuery::UniqueConcepts, ind("EU"), m).rows.empty());
}

TEST(Canned, MatchesReferenceQueryTexts) {
    const Materialization m = materialize(federated());
    auto union_of = [&](const std::vector<std::string>& texts) {
        std::set<std::vector<Term>> rows;
        for (const auto& t : texts) {
            for (const auto& r : evaluate(parse_query(t), m).rows) rows.insert(r);
        }
        return std::vector<std::vector<Term>>(rows.begin(), rows.end());
    };
    const auto p = canned_query(CannedQuery::PrinciplesByFramework, std::nullopt, m);
    EXPECT_EQ(p.rows, union_of(reference_query_texts(CannedQuery::PrinciplesByFramework, std::nullopt)));
    for (const char* c : {"AU_Fairness", "EU_Fairness", "AU_Contestability"}) {
        const auto s = canned_query(CannedQuery::ScenariosFor, ind(c), m);
        EXPECT_EQ(s.rows, union_of(reference_query_texts(CannedQuery::ScenariosFor, ind(c)))) << c;
    }
    EXPECT_EQ(canned_query(CannedQuery::ScenariosFor, ind("AU_Fairness"), m).rows.size(), 2u);
}

TEST(Canned, ConsolidationNeverShrinksResults) {
    OntologyStore s = federated();
    OntologyStore without = seed_aieo_schema();
    for (const auto& ax : s.axioms()) {
        if (!std::holds_alternative<SameIndividual>(ax)) without.add(ax);
    }
    const Materialization a = materialize(without);
    const Materialization b = materialize(s);
    for (auto q : {CannedQuery::PrinciplesByFramework}) {
        const auto before = canned_query(q, std::nullopt, a).rows;
        const auto after = canned_query(q, std::nullopt, b).rows;
        EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
    for (const char* c : {"AU_Fairness", "EU_Accountability"}) {
        for (auto q : {CannedQuery::DescribeConcept, CannedQuery::ScenariosFor}) {
            const auto before = canned_query(q, ind(c), a).rows;
            const auto after = canned_query(q, ind(c), b).rows;
            EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        }
    }
}

}  // namespace
}  // namespace aieo
