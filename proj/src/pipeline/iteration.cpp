#include "aieo/pipeline.hpp"

#include "aieo/error.hpp"
#include "aieo/vocabulary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace aieo {

namespace {

std::vector<Iri> frameworks_of(const OntologyStore& store) {
    std::vector<Iri> out;
    for (const auto& ca : store.all<ClassAssertion>()) {
        if (ca.cls == vocab::Framework()) out.push_back(ca.individual);
    }
    return out;
}

// Principle/Requirement/FundamentalRight concepts linked from `framework`, with their labels.
std::map<Iri, std::vector<std::string>> consolidation_candidates(const OntologyStore& store, const Iri& framework) {
    const std::set<Iri> links{vocab::principle(), vocab::requirement(), vocab::fundamentalRight()};
    std::map<Iri, std::vector<std::string>> out;
    for (const auto& pa : store.all<ObjectPropertyAssertion>()) {
        if (pa.subject != framework || !links.count(pa.property)) continue;
        auto& labels = out[pa.object];
        for (const auto& v : store.annotations(pa.object, vocab::label())) labels.push_back(v.text);
        if (labels.empty()) labels.emplace_back(pa.object.local_name());
    }
    return out;
}

std::set<std::string> tokens_of(const std::string& normalized) {
    std::set<std::string> out;
    std::istringstream in(normalized);
    for (std::string t; in >> t;) out.insert(t);
    return out;
}

}  // namespace

std::string normalize_label(std::string_view label) {
    std::string out;
    bool space = false;
    for (unsigned char c : label) {
        if (std::isspace(c)) {
            space = !out.empty();
        } else if (std::isalnum(c) || c >= 0x80) {
            if (space) out += ' ';
            space = false;
            out += static_cast<char>(std::tolower(c));
        }
        // other punctuation is dropped
    }
    return out;
}

double label_similarity(std::string_view a, std::string_view b) {
    const std::string na = normalize_label(a);
    const std::string nb = normalize_label(b);
    if (na == nb) return na.empty() ? 0.0 : 1.0;
    const auto ta = tokens_of(na);
    const auto tb = tokens_of(nb);
    std::size_t common = 0;
    for (const auto& t : ta) common += tb.count(t);
    const std::size_t total = ta.size() + tb.size() - common;
    return total == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(total);
}

std::vector<EquivalenceProposal> propose_equivalences(const OntologyStore& store, const Iri& newFramework,
                                                      double threshold) {
    const auto frameworks = frameworks_of(store);
    if (std::find(frameworks.begin(), frameworks.end(), newFramework) == frameworks.end()) {
        throw Error(ErrorCode::UnknownFramework, newFramework.str() + " is not an ingested framework");
    }
    if (frameworks.size() < 2) {
        throw Error(ErrorCode::InsufficientFrameworks, "consolidation needs at least two ingested frameworks");
    }
    const auto mine = consolidation_candidates(store, newFramework);
    std::vector<EquivalenceProposal> out;
    for (const auto& other : frameworks) {
        if (other == newFramework) continue;
        for (const auto& [right, rightLabels] : consolidation_candidates(store, other)) {
            for (const auto& [left, leftLabels] : mine) {
                if (left == right || store.contains(make_same(left, right))) continue;
                double best = 0.0;
                for (const auto& l : leftLabels) {
                    for (const auto& r : rightLabels) best = std::max(best, label_similarity(l, r));
                }
                if (best >= threshold) out.push_back({left, right, best, ProposalStatus::Proposed});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EquivalenceProposal& a, const EquivalenceProposal& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.left == b.left && a.right == b.right; }),
              out.end());
    return out;
}

void apply_equivalences(OntologyStore& store, const std::vector<EquivalenceProposal>& proposals) {
    for (const auto& p : proposals) {
        if (p.status != ProposalStatus::Confirmed) {
            throw Error(ErrorCode::UnconfirmedProposal, "proposal " + p.left.str() + " = " + p.right.str() + " is " +
                                                            std::string(to_string(p.status)));
        }
    }
    OntologyStore next = store;
    for (const auto& p : proposals) next.add(make_same(p.left, p.right));
    store = std::move(next);
}

IterationResult run_iteration(const OntologyStore& store, const FrameworkDocument& doc, const PipelineConfig& cfg,
                              const KeywordExtractor& extractor) {
    if (cfg.frameworkId != doc.id) {
        throw Error(ErrorCode::ValidationError,
                    "config is for " + cfg.frameworkId.str() + " but the document is " + doc.id.str());
    }
    if (store.kind_of(vocab::Framework()) != EntityKind::OwlClass) {
        throw Error(ErrorCode::ValidationError, "the store does not contain the AI-EO schema");
    }
    IterationResult result{store, {}};
    OntologyStore& work = result.store;
    IterationRecord& record = result.record;
    record.framework = doc.id;
    record.before = compute_metrics(store);

    structure_framework(work, doc);
    attach_keywords(work, doc.id, extractor.extract(doc, cfg.extraction), cfg.classification, cfg.extraction,
                    extractor);
    for (const auto& decl : doc.conceptDeclarations) {
        std::vector<std::pair<Iri, AnnotationValue>> annotations;
        if (!decl.shortDescription.empty())
            annotations.push_back({vocab::shortDescription(), {decl.shortDescription, std::nullopt}});
        if (!decl.reference.empty()) annotations.push_back({vocab::reference(), {decl.reference, std::nullopt}});
        enrich(work, concept_iri(doc.id, decl.name), annotations);
    }

    const auto frameworks = frameworks_of(work);
    if (frameworks.size() >= 2) {
        record.proposals = propose_equivalences(work, doc.id, cfg.similarityThreshold);
        std::vector<EquivalenceProposal> confirmed;
        for (const auto& decision : cfg.equivalences) {
            double score = 0.0;
            for (auto& p : record.proposals) {
                if (make_same(p.left, p.right) == make_same(decision.left, decision.right)) {
                    p.status = decision.status;
                    score = p.score;
                }
            }
            if (decision.status == ProposalStatus::Confirmed) {
                confirmed.push_back({decision.left, decision.right, score, ProposalStatus::Confirmed});
            }
        }
        apply_equivalences(work, confirmed);
    }

    record.iterationIndex = frameworks.size();
    record.after = compute_metrics(work);
    record.increment = static_cast<std::int64_t>(record.after.axiomCount) - static_cast<std::int64_t>(record.before.axiomCount);
    record.saturated = detect_saturation({record}, cfg.saturationThreshold).front();
    return result;
}

std::vector<bool> detect_saturation(const std::vector<IterationRecord>& history, double threshold) {
    if (!(threshold > 0.0)) throw Error(ErrorCode::ValidationError, "saturation threshold must be positive");
    std::vector<bool> out;
    out.reserve(history.size());
    for (const auto& r : history) {
        const double base = static_cast<double>(std::max<std::size_t>(1, r.before.axiomCount));
        out.push_back(r.increment == 0 || static_cast<double>(r.increment) / base < threshold);
    }
    return out;
}

namespace {

nlohmann::ordered_json metrics_json(const MetricsReport& m) {
    return {{"axiomCount", m.axiomCount},
            {"logicalAxiomCount", m.logicalAxiomCount},
            {"declarationAxiomCount", m.declarationAxiomCount},
            {"annotationAssertionCount", m.annotationAssertionCount},
            {"classCount", m.classCount},
            {"objectPropertyCount", m.objectPropertyCount},
            {"dataPropertyCount", m.dataPropertyCount},
            {"individualCount", m.individualCount},
            {"annotationPropertyCount", m.annotationPropertyCount}};
}

}  // namespace

std::string metrics_to_json(const MetricsReport& report) { return metrics_json(report).dump(2) + "\n"; }

std::string iteration_record_to_json(const IterationRecord& record, const PrefixMap& prefixes) {
    nlohmann::ordered_json proposals = nlohmann::ordered_json::array();
    for (const auto& p : record.proposals) {
        proposals.push_back({{"left", prefixes.compact(p.left)},
                             {"right", prefixes.compact(p.right)},
                             {"score", p.score},
                             {"status", std::string(to_string(p.status))}});
    }
    nlohmann::ordered_json j{{"iterationIndex", record.iterationIndex},
                             {"framework", prefixes.compact(record.framework)},
                             {"before", metrics_json(record.before)},
                             {"after", metrics_json(record.after)},
                             {"increment", record.increment},
                             {"saturated", record.saturated},
                             {"proposals", std::move(proposals)}};
    return j.dump(2) + "\n";
}

}  // namespace aieo
