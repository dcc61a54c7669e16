#include "aieo/pipeline.hpp"

#include "aieo/vocabulary.hpp"
#include "serialization/json_util.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace aieo {

using nlohmann::json;

namespace {

[[noreturn]] void violation(const std::string& field, const std::string& message) {
    throw Error(ErrorCode::SchemaViolation, "field '" + field + "' " + message);
}

std::string optional_string(const json& j, const char* field, const std::string& path) {
    if (!j.contains(field)) return {};
    if (!j[field].is_string()) violation(path + field, "must be a string");
    return j[field].get<std::string>();
}

bool is_token_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

const std::map<std::string, std::pair<Iri, Iri>>& concept_kinds() {
    // kind name -> (class, linking property)
    static const std::map<std::string, std::pair<Iri, Iri>> kinds{
        {"Principle", {vocab::Principle(), vocab::principle()}},
        {"Requirement", {vocab::Requirement(), vocab::requirement()}},
        {"FundamentalRight", {vocab::FundamentalRight(), vocab::fundamentalRight()}},
        {"AI_Dimension", {vocab::AI_Dimension(), vocab::dimension()}},
    };
    return kinds;
}

}  // namespace

FrameworkDocument parse_framework_document(std::string_view text) {
    json doc = detail::parse_json_document(text);
    if (!doc.is_object()) violation("<root>", "must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "id" && key != "title" && key != "sections" && key != "conceptDeclarations")
            violation(key, "is not a recognised field");
    }
    FrameworkDocument out;
    auto id = PrefixMap::standard().try_expand(detail::required_string(doc, "id"));
    if (!id) violation("id", "is not a resolvable IRI");
    out.id = *id;
    out.title = detail::required_string(doc, "title");
    if (doc.contains("sections")) {
        if (!doc["sections"].is_array()) violation("sections", "must be an array");
        for (std::size_t i = 0; i < doc["sections"].size(); ++i) {
            const json& s = doc["sections"][i];
            const std::string path = "sections[" + std::to_string(i) + "].";
            if (!s.is_object()) violation(path, "must be an object");
            out.sections.push_back({optional_string(s, "heading", path), optional_string(s, "body", path)});
        }
    }
    if (doc.contains("conceptDeclarations")) {
        if (!doc["conceptDeclarations"].is_array()) violation("conceptDeclarations", "must be an array");
        for (std::size_t i = 0; i < doc["conceptDeclarations"].size(); ++i) {
            const json& c = doc["conceptDeclarations"][i];
            const std::string path = "conceptDeclarations[" + std::to_string(i) + "].";
            if (!c.is_object()) violation(path, "must be an object");
            ConceptDeclaration decl{optional_string(c, "name", path), optional_string(c, "kind", path),
                                    optional_string(c, "shortDescription", path), optional_string(c, "reference", path)};
            if (decl.name.empty()) violation(path + "name", "must be a non-empty string");
            if (decl.kind.empty()) violation(path + "kind", "must be a non-empty string");
            out.conceptDeclarations.push_back(std::move(decl));
        }
    }
    return out;
}

Iri concept_iri(const Iri& framework, std::string_view name) {
    std::string local;
    bool pending = false;
    for (unsigned char c : name) {
        if (is_token_byte(c)) {
            if (pending && !local.empty()) local += '_';
            pending = false;
            local += static_cast<char>(c);
        } else {
            pending = true;
        }
    }
    if (local.empty()) throw Error(ErrorCode::ValidationError, "concept name '" + std::string(name) + "' has no letters or digits");
    return Iri(framework.str() + "_" + local);
}

Iri keyword_iri(std::string_view token) { return vocab::aieo("kw_" + std::string(token)); }

void structure_framework(OntologyStore& store, const FrameworkDocument& doc) {
    if (store.kind_of(doc.id)) {
        throw Error(ErrorCode::DuplicateFramework, doc.id.str() + " is already ingested");
    }
    std::set<std::string> names;
    for (const auto& decl : doc.conceptDeclarations) {
        if (!concept_kinds().count(decl.kind)) {
            throw Error(ErrorCode::UnknownKind, "concept '" + decl.name + "' has kind '" + decl.kind +
                                                    "'; expected Principle, Requirement, FundamentalRight or AI_Dimension");
        }
        if (!names.insert(decl.name).second) {
            throw Error(ErrorCode::SchemaViolation, "concept name '" + decl.name + "' appears twice in " + doc.id.str());
        }
    }

    OntologyStore next = store;
    next.declare(doc.id, EntityKind::NamedIndividual);
    next.add(ClassAssertion{vocab::Framework(), doc.id});
    if (!doc.title.empty()) next.add(AnnotationAssertion{doc.id, vocab::label(), {doc.title, std::nullopt}});
    for (const auto& decl : doc.conceptDeclarations) {
        const auto& [cls, link] = concept_kinds().at(decl.kind);
        const Iri iri = concept_iri(doc.id, decl.name);
        if (next.kind_of(iri) == EntityKind::NamedIndividual && !store.kind_of(iri)) {
            throw Error(ErrorCode::SchemaViolation, "concept names in " + doc.id.str() + " collide on " + iri.str());
        }
        next.declare(iri, EntityKind::NamedIndividual);
        next.add(ClassAssertion{cls, iri});
        next.add(ObjectPropertyAssertion{doc.id, link, iri});
        next.add(AnnotationAssertion{iri, vocab::label(), {decl.name, std::nullopt}});
    }
    store = std::move(next);
}

std::vector<ScoredKeyword> TermFrequencyExtractor::extract(const FrameworkDocument& doc,
                                                           const ExtractionConfig& cfg) const {
    std::map<std::string, std::size_t> counts;
    for (const auto& section : doc.sections) {
        std::string token;
        auto flush = [&] {
            if (token.size() >= static_cast<std::size_t>(cfg.minTokenLength) && !cfg.stopwords.count(token)) {
                ++counts[token];
            }
            token.clear();
        };
        for (unsigned char c : section.body) {
            if (is_token_byte(c)) {
                token += static_cast<char>(std::tolower(c));
            } else {
                flush();
            }
        }
        flush();
    }
    std::vector<ScoredKeyword> out;
    out.reserve(counts.size());
    for (const auto& [token, n] : counts) out.push_back({token, static_cast<double>(n)});
    std::stable_sort(out.begin(), out.end(), [](const ScoredKeyword& a, const ScoredKeyword& b) {
        return a.score > b.score;  // map order already gives ascending ties
    });
    if (out.size() > static_cast<std::size_t>(std::max(cfg.topK, 0))) out.resize(static_cast<std::size_t>(std::max(cfg.topK, 0)));
    return out;
}

std::string TermFrequencyExtractor::describe(const ExtractionConfig& cfg) const {
    return "tf-topk(topK=" + std::to_string(cfg.topK) + ",minLen=" + std::to_string(cfg.minTokenLength) +
           ",relevantTopK=" + std::to_string(cfg.relevantTopK) + ")";
}

std::vector<ScoredKeyword> extract_keywords(const FrameworkDocument& doc, const ExtractionConfig& cfg) {
    return TermFrequencyExtractor{}.extract(doc, cfg);
}

void attach_keywords(OntologyStore& store, const Iri& framework, const std::vector<ScoredKeyword>& extracted,
                     const ClassificationMap& map, const ExtractionConfig& cfg, const KeywordExtractor& extractor) {
    if (!store.contains(ClassAssertion{vocab::Framework(), framework})) {
        throw Error(ErrorCode::UnknownFramework, framework.str() + " has not been structured yet");
    }
    OntologyStore next = store;
    bool relevant = false;
    for (std::size_t i = 0; i < extracted.size(); ++i) {
        const auto& kw = extracted[i];
        const Iri iri = keyword_iri(kw.keyword);
        next.declare(iri, EntityKind::NamedIndividual);
        auto mapped = map.find(kw.keyword);
        next.add(ClassAssertion{mapped == map.end() ? vocab::Keyword() : mapped->second, iri});
        next.add(ObjectPropertyAssertion{framework, vocab::keyword(), iri});
        if (i < static_cast<std::size_t>(std::max(cfg.relevantTopK, 0))) {
            next.add(ObjectPropertyAssertion{framework, vocab::relevantKeyword(), iri});
            relevant = true;
        }
    }
    if (relevant) next.add(AnnotationAssertion{framework, vocab::method(), {extractor.describe(cfg), std::nullopt}});
    store = std::move(next);
}

void enrich(OntologyStore& store, const Iri& subject, const std::vector<std::pair<Iri, AnnotationValue>>& annotations) {
    if (!store.kind_of(subject)) throw Error(ErrorCode::UndeclaredEntity, subject.str() + " is not declared");
    const std::vector<Iri> allowed{vocab::method(), vocab::reference(), vocab::shortDescription(), vocab::label()};
    for (const auto& [prop, value] : annotations) {
        if (std::find(allowed.begin(), allowed.end(), prop) == allowed.end()) {
            throw Error(ErrorCode::UnknownAnnotationProperty,
                        prop.str() + " is not one of method, reference, shortDescription, rdfs:label");
        }
    }
    OntologyStore next = store;
    for (const auto& [prop, value] : annotations) next.add(AnnotationAssertion{subject, prop, value});
    store = std::move(next);
}

}  // namespace aieo
