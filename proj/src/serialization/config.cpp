#include "aieo/pipeline_config.hpp"

#include "aieo/error.hpp"
#include "aieo/vocabulary.hpp"
#include "serialization/json_util.hpp"

#include <algorithm>
#include <cctype>

namespace aieo {

using nlohmann::json;

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words{
        "a",     "about", "all",   "also",  "an",    "and",   "any",   "are",   "as",    "at",    "be",
        "been",  "being", "both",  "but",   "by",    "can",   "could", "do",    "does",  "each",  "for",
        "from",  "had",   "has",   "have",  "how",   "if",    "in",    "into",  "is",    "it",    "its",
        "may",   "more",  "most",  "must",  "no",    "not",   "of",    "on",    "or",    "other", "our",
        "over",  "shall", "should", "so",   "such",  "than",  "that",  "the",   "their", "them",  "then",
        "there", "these", "they",  "this",  "those", "through", "to",  "under", "up",    "use",   "used",
        "very",  "was",   "we",    "were",  "what",  "when",  "where", "which", "while", "who",   "will",
        "with",  "within", "without", "would", "you", "your",
    };
    return words;
}

std::string_view to_string(ProposalStatus status) {
    switch (status) {
        case ProposalStatus::Proposed: return "proposed";
        case ProposalStatus::Confirmed: return "confirmed";
        case ProposalStatus::Rejected: return "rejected";
    }
    return "proposed";
}

namespace {

[[noreturn]] void violation(const std::string& field, const std::string& message) {
    throw Error(ErrorCode::SchemaViolation, "field '" + field + "' " + message);
}

Iri iri_field(const json& j, const std::string& field, const std::string& path, const PrefixMap& px) {
    if (!j.contains(field) || !j[field].is_string()) violation(path, "must be a string IRI");
    auto iri = px.try_expand(j[field].get<std::string>());
    if (!iri) violation(path, "is not a resolvable IRI");
    return *iri;
}

int int_field(const json& j, const std::string& field, const std::string& path, int minimum) {
    const json& v = j[field];
    if (!v.is_number_integer()) violation(path, "must be an integer");
    auto value = v.get<long long>();
    if (value < minimum || value > 1'000'000) violation(path, "is out of range");
    return static_cast<int>(value);
}

double positive_number(const json& j, const std::string& field) {
    const json& v = j[field];
    if (!v.is_number()) violation(field, "must be a number");
    double value = v.get<double>();
    if (!(value > 0.0) || value > 1.0) violation(field, "must be in (0, 1]");
    return value;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& scope) {
    for (const auto& [key, value] : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known) violation(scope + key, "is not a recognised field");
    }
}

ExtractionConfig parse_extraction(const json& j) {
    if (!j.is_object()) violation("extraction", "must be an object");
    reject_unknown(j, {"stopwords", "minTokenLength", "topK", "relevantTopK"}, "extraction.");
    ExtractionConfig cfg;
    if (j.contains("stopwords")) {
        if (!j["stopwords"].is_array()) violation("extraction.stopwords", "must be an array of strings");
        cfg.stopwords.clear();
        for (const auto& word : j["stopwords"]) {
            if (!word.is_string()) violation("extraction.stopwords", "must be an array of strings");
            std::string lower = word.get<std::string>();
            std::transform(lower.begin(), lower.end(), lower.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            cfg.stopwords.insert(lower);
        }
    }
    if (j.contains("minTokenLength")) cfg.minTokenLength = int_field(j, "minTokenLength", "extraction.minTokenLength", 1);
    if (j.contains("topK")) cfg.topK = int_field(j, "topK", "extraction.topK", 1);
    cfg.relevantTopK = std::min(3, cfg.topK);
    if (j.contains("relevantTopK")) cfg.relevantTopK = int_field(j, "relevantTopK", "extraction.relevantTopK", 0);
    if (cfg.relevantTopK > cfg.topK) violation("extraction.relevantTopK", "must not exceed topK");
    return cfg;
}

ClassificationMap parse_classification(const json& j, const PrefixMap& px) {
    if (!j.is_object()) violation("classification", "must be an object");
    const auto targets = vocab::keyword_subclasses();
    ClassificationMap map;
    for (const auto& [keyword, target] : j.items()) {
        const std::string path = "classification." + keyword;
        if (keyword.empty()) violation(path, "has an empty keyword");
        if (!target.is_string()) violation(path, "must be a string IRI");
        auto cls = px.try_expand(target.get<std::string>());
        if (!cls) violation(path, "is not a resolvable IRI");
        if (std::find(targets.begin(), targets.end(), *cls) == targets.end()) {
            violation(path, "must name a subclass of aieo:Keyword, got '" + target.get<std::string>() + "'");
        }
        std::string lower = keyword;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        map[lower] = *cls;
    }
    return map;
}

std::vector<EquivalenceDecision> parse_equivalences(const json& j, const PrefixMap& px) {
    if (!j.is_array()) violation("equivalences", "must be an array");
    std::vector<EquivalenceDecision> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "equivalences[" + std::to_string(i) + "]";
        const json& entry = j[i];
        if (!entry.is_object()) violation(path, "must be an object");
        reject_unknown(entry, {"left", "right", "status"}, path + ".");
        EquivalenceDecision decision{iri_field(entry, "left", path + ".left", px),
                                     iri_field(entry, "right", path + ".right", px), ProposalStatus::Confirmed};
        if (entry.contains("status")) {
            if (!entry["status"].is_string()) violation(path + ".status", "must be a string");
            auto status = entry["status"].get<std::string>();
            if (status == "confirmed") {
                decision.status = ProposalStatus::Confirmed;
            } else if (status == "rejected") {
                decision.status = ProposalStatus::Rejected;
            } else if (status == "proposed") {
                decision.status = ProposalStatus::Proposed;
            } else {
                violation(path + ".status", "must be one of proposed, confirmed, rejected");
            }
        }
        if (decision.left == decision.right) violation(path, "pairs an individual with itself");
        out.push_back(std::move(decision));
    }
    return out;
}

}  // namespace

PipelineConfig parse_config(std::string_view text) {
    json doc = detail::parse_json_document(text);
    if (!doc.is_object()) violation("<root>", "must be a JSON object");
    reject_unknown(doc,
                   {"frameworkId", "title", "extraction", "classification", "equivalences", "similarityThreshold",
                    "saturationThreshold"},
                   "");
    const PrefixMap px = PrefixMap::standard();
    PipelineConfig cfg;
    cfg.frameworkId = iri_field(doc, "frameworkId", "frameworkId", px);
    if (!doc.contains("title") || !doc["title"].is_string() || doc["title"].get<std::string>().empty())
        violation("title", "must be a non-empty string");
    cfg.title = doc["title"].get<std::string>();
    if (doc.contains("extraction")) cfg.extraction = parse_extraction(doc["extraction"]);
    if (doc.contains("classification")) cfg.classification = parse_classification(doc["classification"], px);
    if (doc.contains("equivalences")) cfg.equivalences = parse_equivalences(doc["equivalences"], px);
    if (doc.contains("similarityThreshold")) cfg.similarityThreshold = positive_number(doc, "similarityThreshold");
    if (doc.contains("saturationThreshold")) cfg.saturationThreshold = positive_number(doc, "saturationThreshold");
    return cfg;
}

}  // namespace aieo
