#include "aieo/graph_export.hpp"

#include "aieo/vocabulary.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace aieo {

namespace {

// Smallest member of each IRI's equivalence block.
std::map<Iri, Iri> representatives(const OntologyStore& store, EquivalenceKind kind) {
    std::map<Iri, Iri> out;
    for (const auto& block : equivalence_classes(store, kind)) {
        for (const auto& iri : block) out.emplace(iri, block.front());
    }
    return out;
}

Iri rep_of(const std::map<Iri, Iri>& reps, const Iri& iri) {
    auto it = reps.find(iri);
    return it == reps.end() ? iri : it->second;
}

// Reflexive-transitive superclasses over representatives.
std::map<Iri, std::set<Iri>> superclass_closure(const OntologyStore& store, const std::map<Iri, Iri>& reps) {
    std::map<Iri, std::set<Iri>> direct;
    for (const auto& sc : store.all<SubClassOf>()) direct[rep_of(reps, sc.sub)].insert(rep_of(reps, sc.sup));
    std::map<Iri, std::set<Iri>> out;
    for (const auto& cls : store.entities(EntityKind::OwlClass)) {
        const Iri start = rep_of(reps, cls);
        if (out.count(start)) continue;
        std::set<Iri> seen{start};
        std::vector<Iri> stack{start};
        while (!stack.empty()) {
            Iri cur = stack.back();
            stack.pop_back();
            auto it = direct.find(cur);
            if (it == direct.end()) continue;
            for (const auto& sup : it->second) {
                if (seen.insert(sup).second) stack.push_back(sup);
            }
        }
        out.emplace(start, std::move(seen));
    }
    return out;
}

std::string display_label(const OntologyStore& store, const Iri& iri) {
    auto labels = store.annotations(iri, vocab::label());
    if (!labels.empty()) {
        std::sort(labels.begin(), labels.end());
        return labels.front().text;
    }
    return std::string(iri.local_name());
}

std::string summary_of(const OntologyStore& store, const Iri& iri) {
    std::vector<std::string> parts;
    for (const auto& prop : {vocab::shortDescription(), vocab::reference(), vocab::method()}) {
        auto values = store.annotations(iri, prop);
        std::sort(values.begin(), values.end());
        for (const auto& v : values) parts.push_back(std::string(prop.local_name()) + ": " + v.text);
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else if (c != '\r') {
            out += c;
        }
    }
    return out;
}

}  // namespace

std::optional<DetailLevel> detail_level_from_int(int level) {
    if (level < 1 || level > 3) return std::nullopt;
    return static_cast<DetailLevel>(level);
}

std::string_view to_string(NodeKind kind) { return kind == NodeKind::Class ? "class" : "individual"; }

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Subclass: return "subclass";
        case EdgeKind::Equivalence: return "equivalence";
        case EdgeKind::Membership: return "membership";
        case EdgeKind::Assertion: return "assertion";
    }
    return "assertion";
}

GraphDoc export_graph(const Materialization& mat, DetailLevel level) {
    const OntologyStore& store = mat.base();
    const PrefixMap& px = store.prefixes();
    auto id = [&](const Iri& iri) { return px.compact(iri); };

    std::set<GraphNode> classes;
    std::set<GraphNode> individuals;
    std::set<GraphEdge> edges;

    for (const auto& cls : store.entities(EntityKind::OwlClass)) {
        classes.insert({id(cls), display_label(store, cls), NodeKind::Class, summary_of(store, cls),
                        mat.members_of(cls).size()});
    }
    for (const auto& sc : store.all<SubClassOf>()) edges.insert({EdgeKind::Subclass, id(sc.sub), id(sc.sup), "subClassOf"});
    for (const auto& eq : store.all<EquivalentClasses>()) {
        for (std::size_t i = 1; i < eq.classes.size(); ++i) {
            edges.insert({EdgeKind::Equivalence, id(eq.classes.front()), id(eq.classes[i]), "equivalentClass"});
        }
    }

    if (level >= DetailLevel::L2_PlusIndividuals) {
        const auto class_reps = representatives(store, EquivalenceKind::Class);
        const auto supers = superclass_closure(store, class_reps);
        for (const auto& ind : store.entities(EntityKind::NamedIndividual)) {
            individuals.insert({id(ind), display_label(store, ind), NodeKind::Individual, summary_of(store, ind), 0});
            std::set<Iri> types;
            for (const auto& t : mat.types_of(ind)) types.insert(rep_of(class_reps, t));
            for (const auto& t : types) {
                // Most specific: no other type lies strictly below t.
                bool specific = std::none_of(types.begin(), types.end(), [&](const Iri& other) {
                    if (other == t) return false;
                    const auto& up = supers.at(other);
                    const auto& mine = supers.at(t);
                    return up.count(t) && !mine.count(other);
                });
                if (specific) edges.insert({EdgeKind::Membership, id(ind), id(t), "type"});
            }
        }
    }

    if (level >= DetailLevel::L3_PlusInstanceRelationships) {
        const auto prop_reps = representatives(store, EquivalenceKind::Property);
        for (const auto& pa : store.all<ObjectPropertyAssertion>()) {
            const Iri prop = rep_of(prop_reps, pa.property);
            edges.insert({EdgeKind::Assertion, id(pa.subject), id(pa.object), id(prop)});
        }
        for (const auto& si : store.all<SameIndividual>()) {
            edges.insert({EdgeKind::Equivalence, id(si.first), id(si.second), "sameAs"});
        }
    }

    GraphDoc doc;
    doc.nodes.assign(classes.begin(), classes.end());
    doc.nodes.insert(doc.nodes.end(), individuals.begin(), individuals.end());
    doc.edges.assign(edges.begin(), edges.end());
    return doc;
}

std::string render_dot(const GraphDoc& graph) {
    std::ostringstream out;
    out << "digraph aieo {\n";
    if (!graph.nodes.empty()) out << "  rankdir=BT;\n";
    for (const auto& n : graph.nodes) {
        out << "  \"" << dot_escape(n.id) << "\" [shape=" << (n.kind == NodeKind::Class ? "box" : "ellipse")
            << ", label=\"" << dot_escape(n.label);
        if (n.kind == NodeKind::Class) out << "\\n(" << n.memberCount << ")";
        out << "\"";
        if (!n.summary.empty()) out << ", tooltip=\"" << dot_escape(n.summary) << "\"";
        out << "];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\" [label=\"" << dot_escape(e.label)
            << "\"";
        switch (e.kind) {
            case EdgeKind::Subclass: out << ", arrowhead=empty"; break;
            case EdgeKind::Equivalence: out << ", style=dashed, dir=both"; break;
            case EdgeKind::Membership: out << ", style=dotted"; break;
            case EdgeKind::Assertion: break;
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_json(const GraphDoc& graph) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : graph.nodes) {
        nlohmann::ordered_json j{{"id", n.id}, {"label", n.label}, {"kind", std::string(to_string(n.kind))},
                                 {"summary", n.summary}};
        if (n.kind == NodeKind::Class) j["memberCount"] = n.memberCount;
        nodes.push_back(std::move(j));
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : graph.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}, {"kind", std::string(to_string(e.kind))}});
    }
    nlohmann::ordered_json doc{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

}  // namespace aieo
