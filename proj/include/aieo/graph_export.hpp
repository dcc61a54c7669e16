#pragma once

#include "aieo/reasoner.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aieo {

enum class DetailLevel {
    L1_ClassesAndHierarchy = 1,
    L2_PlusIndividuals = 2,
    L3_PlusInstanceRelationships = 3,
};

std::optional<DetailLevel> detail_level_from_int(int level);

enum class NodeKind { Class, Individual };
enum class EdgeKind { Subclass, Equivalence, Membership, Assertion };

std::string_view to_string(NodeKind kind);  // "class", "individual"
std::string_view to_string(EdgeKind kind);  // "subclass", "equivalence", "membership", "assertion"

struct GraphNode {
    std::string id;  // compacted IRI
    std::string label;
    NodeKind kind = NodeKind::Class;
    std::string summary;
    std::size_t memberCount = 0;  // classes only: members in the materialization

    auto operator<=>(const GraphNode&) const = default;
};

struct GraphEdge {
    EdgeKind kind = EdgeKind::Subclass;
    std::string from;
    std::string to;
    std::string label;

    auto operator<=>(const GraphEdge&) const = default;
};

struct GraphDoc {
    std::vector<GraphNode> nodes;  // classes then individuals, each sorted by id
    std::vector<GraphEdge> edges;  // sorted by (kind, from, to, label)

    bool operator==(const GraphDoc&) const = default;
};

// L1: every class with its member count, asserted subclass edges, and each
//     class equivalence drawn as a star from its smallest member.
// L2: adds individuals and a membership edge to each most-specific type
//     (equivalent classes collapse to their smallest member).
// L3: adds asserted property assertions, relabelled with the smallest
//     property of their equivalence block and deduplicated, and asserted
//     SameIndividual pairs as equivalence edges.
GraphDoc export_graph(const Materialization& mat, DetailLevel level);

std::string render_dot(const GraphDoc& graph);
std::string render_json(const GraphDoc& graph);

}  // namespace aieo
