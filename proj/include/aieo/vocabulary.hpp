#pragma once

#include "aieo/iri.hpp"

#include <string>
#include <string_view>
#include <vector>

// IRIs of the AI-EO schema and the W3C terms the serializers map.
namespace aieo::vocab {

inline Iri aieo(std::string_view local) { return Iri(std::string(ns::aieo) + std::string(local)); }
inline Iri rdf(std::string_view local) { return Iri(std::string(ns::rdf) + std::string(local)); }
inline Iri rdfs(std::string_view local) { return Iri(std::string(ns::rdfs) + std::string(local)); }
inline Iri owl(std::string_view local) { return Iri(std::string(ns::owl) + std::string(local)); }

// Central concepts
inline Iri AI_Dimension() { return aieo("AI_Dimension"); }
inline Iri Framework() { return aieo("Framework"); }
inline Iri FundamentalRight() { return aieo("FundamentalRight"); }
inline Iri Principle() { return aieo("Principle"); }
inline Iri Requirement() { return aieo("Requirement"); }

// Materialisation & association
inline Iri Application() { return aieo("Application"); }
inline Iri Example() { return aieo("Example"); }
inline Iri Scenario() { return aieo("Scenario"); }
inline Iri UseCase() { return aieo("UseCase"); }

// Concept analysis & classification
inline Iri Keyword() { return aieo("Keyword"); }

// The nine direct subclasses of Keyword.
std::vector<Iri> keyword_subclasses();

// Object properties
inline Iri application() { return aieo("application"); }
inline Iri dimension() { return aieo("dimension"); }
inline Iri example() { return aieo("example"); }
inline Iri fundamentalRight() { return aieo("fundamentalRight"); }
inline Iri keyword() { return aieo("keyword"); }
inline Iri relevantKeyword() { return aieo("relevantKeyword"); }
inline Iri principle() { return aieo("principle"); }
inline Iri requirement() { return aieo("requirement"); }
inline Iri scenario() { return aieo("scenario"); }
inline Iri useCase() { return aieo("useCase"); }

// Annotation properties
inline Iri method() { return aieo("method"); }
inline Iri reference() { return aieo("reference"); }
inline Iri shortDescription() { return aieo("shortDescription"); }
inline Iri label() { return rdfs("label"); }

// W3C terms used by the Turtle mapping
inline Iri rdf_type() { return rdf("type"); }
inline Iri rdfs_subClassOf() { return rdfs("subClassOf"); }
inline Iri rdfs_subPropertyOf() { return rdfs("subPropertyOf"); }
inline Iri rdfs_range() { return rdfs("range"); }
inline Iri rdfs_domain() { return rdfs("domain"); }
inline Iri owl_Class() { return owl("Class"); }
inline Iri owl_ObjectProperty() { return owl("ObjectProperty"); }
inline Iri owl_AnnotationProperty() { return owl("AnnotationProperty"); }
inline Iri owl_DatatypeProperty() { return owl("DatatypeProperty"); }
inline Iri owl_NamedIndividual() { return owl("NamedIndividual"); }
inline Iri owl_Ontology() { return owl("Ontology"); }
inline Iri owl_equivalentClass() { return owl("equivalentClass"); }
inline Iri owl_equivalentProperty() { return owl("equivalentProperty"); }
inline Iri owl_disjointWith() { return owl("disjointWith"); }
inline Iri owl_sameAs() { return owl("sameAs"); }

}  // namespace aieo::vocab
