#pragma once

#include "aieo/iri.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aieo {

// A small English stopword list used when a config does not supply one.
const std::set<std::string>& default_stopwords();

struct ExtractionConfig {
    std::set<std::string> stopwords = default_stopwords();
    int minTokenLength = 3;
    int topK = 10;
    int relevantTopK = 3;  // <= topK
};

// Lower-case keyword -> one of the nine Keyword subclasses.
using ClassificationMap = std::map<std::string, Iri>;

enum class ProposalStatus { Proposed, Confirmed, Rejected };

std::string_view to_string(ProposalStatus status);

// A curator's verdict on a cross-framework pair, carried by the config file.
struct EquivalenceDecision {
    Iri left;
    Iri right;
    ProposalStatus status = ProposalStatus::Proposed;
};

struct PipelineConfig {
    Iri frameworkId;
    std::string title;
    ExtractionConfig extraction;
    ClassificationMap classification;
    std::vector<EquivalenceDecision> equivalences;
    double similarityThreshold = 0.5;
    double saturationThreshold = 0.05;
};

// Parses the JSON pipeline configuration:
//
//   {"frameworkId": "aieo:AU", "title": "...",
//    "extraction": {"stopwords": [...], "minTokenLength": 3, "topK": 10, "relevantTopK": 3},
//    "classification": {"bias": "aieo:Risk_keyword"},
//    "equivalences": [{"left": "...", "right": "...", "status": "confirmed"}],
//    "similarityThreshold": 0.5, "saturationThreshold": 0.05}
//
// Only frameworkId and title are required. relevantTopK defaults to
// min(3, topK). Throws ParseError(SyntaxError) or Error(SchemaViolation)
// naming the offending field.
PipelineConfig parse_config(std::string_view text);

}  // namespace aieo
