#pragma once

#include "aieo/pipeline_config.hpp"
#include "aieo/seed.hpp"
#include "aieo/store.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aieo {

struct DocumentSection {
    std::string heading;
    std::string body;
};

struct ConceptDeclaration {
    std::string name;
    std::string kind;  // Principle, Requirement, FundamentalRight or AI_Dimension
    std::string shortDescription;
    std::string reference;
};

struct FrameworkDocument {
    Iri id;
    std::string title;
    std::vector<DocumentSection> sections;
    std::vector<ConceptDeclaration> conceptDeclarations;
};

// JSON form:
//   {"id": "aieo:AU", "title": "...", "sections": [{"heading": "...", "body": "..."}],
//    "conceptDeclarations": [{"name": "Fairness", "kind": "Principle",
//                             "shortDescription": "...", "reference": "..."}]}
// Throws ParseError(SyntaxError) or Error(SchemaViolation). Kinds are checked
// later, by structure_framework.
FrameworkDocument parse_framework_document(std::string_view text);

// IRI of a declared concept: the framework IRI, '_', then the name with
// every run of non-alphanumeric characters turned into one '_'.
Iri concept_iri(const Iri& framework, std::string_view name);

// IRI of an extracted keyword individual: aieo:kw_<token>.
Iri keyword_iri(std::string_view token);

// Knowledge structure: the Framework individual, one typed individual per
// concept declaration, the linking assertions and rdfs:label values.
// Throws Error(DuplicateFramework), Error(UnknownKind) or Error(SchemaViolation)
// for repeated concept names. `store` is left untouched on failure.
void structure_framework(OntologyStore& store, const FrameworkDocument& doc);

struct ScoredKeyword {
    std::string keyword;
    double score = 0.0;
    bool operator==(const ScoredKeyword&) const = default;
};

class KeywordExtractor {
public:
    virtual ~KeywordExtractor() = default;
    virtual std::vector<ScoredKeyword> extract(const FrameworkDocument& doc, const ExtractionConfig& cfg) const = 0;
    // Recorded verbatim in the method annotation.
    virtual std::string describe(const ExtractionConfig& cfg) const = 0;
};

// Term frequency over section bodies. Tokens are maximal runs of ASCII
// letters/digits (bytes >= 0x80 count as letters), lower-cased.
class TermFrequencyExtractor final : public KeywordExtractor {
public:
    std::vector<ScoredKeyword> extract(const FrameworkDocument& doc, const ExtractionConfig& cfg) const override;
    std::string describe(const ExtractionConfig& cfg) const override;  // "tf-topk(topK=10,minLen=3,relevantTopK=3)"
};

std::vector<ScoredKeyword> extract_keywords(const FrameworkDocument& doc, const ExtractionConfig& cfg);

// Keyword individuals typed per `map` (plain Keyword otherwise), `keyword`
// links from the framework, `relevantKeyword` links for the first
// cfg.relevantTopK entries and a method annotation on the framework when any
// relevantKeyword link was made. Throws Error(UnknownFramework).
void attach_keywords(OntologyStore& store, const Iri& framework, const std::vector<ScoredKeyword>& extracted,
                     const ClassificationMap& map, const ExtractionConfig& cfg,
                     const KeywordExtractor& extractor = TermFrequencyExtractor{});

// Throws Error(UndeclaredEntity) for an undeclared subject and
// Error(UnknownAnnotationProperty) outside {method, reference, shortDescription, rdfs:label}.
void enrich(OntologyStore& store, const Iri& subject, const std::vector<std::pair<Iri, AnnotationValue>>& annotations);

struct EquivalenceProposal {
    Iri left;   // concept of the framework being consolidated
    Iri right;  // concept of another framework
    double score = 0.0;
    ProposalStatus status = ProposalStatus::Proposed;
    bool operator==(const EquivalenceProposal&) const = default;
};

// Case-folded, punctuation-free, whitespace-collapsed form of a label.
std::string normalize_label(std::string_view label);
// 1.0 when the normalized labels match, else the Jaccard index of their token sets.
double label_similarity(std::string_view a, std::string_view b);

// Pairs (concept of newFramework, concept of another framework) among
// Principle/Requirement/FundamentalRight individuals scoring >= threshold,
// skipping pairs already identified. Sorted by (left, right).
// Throws Error(InsufficientFrameworks) or Error(UnknownFramework).
std::vector<EquivalenceProposal> propose_equivalences(const OntologyStore& store, const Iri& newFramework,
                                                      double threshold = 0.5);

// One SameIndividual per proposal. Throws Error(UnconfirmedProposal) before
// changing anything if any proposal is not confirmed.
void apply_equivalences(OntologyStore& store, const std::vector<EquivalenceProposal>& proposals);

struct IterationRecord {
    std::size_t iterationIndex = 0;  // number of frameworks after the iteration
    Iri framework;
    MetricsReport before;
    MetricsReport after;
    std::int64_t increment = 0;
    bool saturated = false;
    std::vector<EquivalenceProposal> proposals;
};

struct IterationResult {
    OntologyStore store;
    IterationRecord record;
};

// Structure, extract and attach, enrich (shortDescription/reference from the
// document), then consolidate against earlier frameworks: proposals are
// scored and every confirmed decision in cfg is applied. Works on a copy;
// the input store is never modified. cfg.frameworkId must equal doc.id.
IterationResult run_iteration(const OntologyStore& store, const FrameworkDocument& doc, const PipelineConfig& cfg,
                              const KeywordExtractor& extractor = TermFrequencyExtractor{});

// saturated[i] = increment / max(1, before.axiomCount) < threshold, and always
// true for a zero increment. Throws Error(ValidationError) for threshold <= 0.
std::vector<bool> detect_saturation(const std::vector<IterationRecord>& history, double threshold);

std::string iteration_record_to_json(const IterationRecord& record, const PrefixMap& prefixes);
std::string metrics_to_json(const MetricsReport& report);

}  // namespace aieo
