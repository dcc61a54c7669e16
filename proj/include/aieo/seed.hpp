#pragma once

#include "aieo/store.hpp"

#include <cstddef>
#include <string>

namespace aieo {

// The AI-EO v1.0 schema: 19 classes, 10 object properties, 4 annotation
// properties, no data properties and no individuals.
OntologyStore seed_aieo_schema();

struct MetricsReport {
    std::size_t axiomCount = 0;
    std::size_t logicalAxiomCount = 0;
    std::size_t declarationAxiomCount = 0;
    std::size_t annotationAssertionCount = 0;
    std::size_t classCount = 0;
    std::size_t objectPropertyCount = 0;
    std::size_t dataPropertyCount = 0;
    std::size_t individualCount = 0;
    std::size_t annotationPropertyCount = 0;

    bool operator==(const MetricsReport&) const = default;
};

// Counts asserted axioms only. axiomCount = logical + declaration + annotation assertion.
MetricsReport compute_metrics(const OntologyStore& store);

// Two-column table whose row labels follow Protege's ontology metrics view.
std::string format_metrics_table(const MetricsReport& report);

}  // namespace aieo
