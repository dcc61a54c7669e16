#include "aieo/seed.hpp"

#include "aieo/vocabulary.hpp"

#include <iomanip>
#include <sstream>
#include <utility>

namespace aieo {

std::vector<Iri> vocab::keyword_subclasses() {
    return {
        aieo("Characteristic_keyword"),
        aieo("Development_keyword"),
        aieo("EnvironmentalDimension_keyword"),
        aieo("GovernamentalDimension_keyword"),
        aieo("IndividualDimension_keyword"),
        aieo("OrganizationalDimension_keyword"),
        aieo("Risk_keyword"),
        aieo("SocialDimension_keyword"),
        aieo("SustainableDevelopment_keyword"),
    };
}

OntologyStore seed_aieo_schema() {
    using namespace vocab;
    OntologyStore store;

    const std::vector<Iri> central{AI_Dimension(), Framework(), FundamentalRight(), Principle(), Requirement()};
    const std::vector<Iri> materialisation{Application(), Example(), Scenario(), UseCase()};

    for (const auto& cls : central) store.declare(cls, EntityKind::OwlClass);
    for (const auto& cls : materialisation) store.declare(cls, EntityKind::OwlClass);
    store.declare(Keyword(), EntityKind::OwlClass);
    for (const auto& cls : keyword_subclasses()) {
        store.declare(cls, EntityKind::OwlClass);
        store.add(SubClassOf{cls, Keyword()});
    }

    // Disjointness among the central concepts, row by row. Principle and
    // Requirement are deliberately left compatible.
    const std::pair<Iri, std::vector<Iri>> disjoint_rows[] = {
        {AI_Dimension(), {Framework(), Principle(), FundamentalRight(), Requirement()}},
        {Framework(), {Principle(), AI_Dimension(), FundamentalRight(), Requirement()}},
        {FundamentalRight(), {Framework(), Principle(), AI_Dimension(), Requirement()}},
        {Principle(), {Framework(), FundamentalRight(), AI_Dimension()}},
        {Requirement(), {Framework(), FundamentalRight(), AI_Dimension()}},
    };
    for (const auto& [cls, others] : disjoint_rows) {
        for (const auto& other : others) store.add(make_disjoint(cls, other));
    }

    store.add(make_equivalent_classes({Application(), UseCase(), Scenario()}));

    const std::pair<Iri, Iri> ranges[] = {
        {application(), Application()},
        {dimension(), AI_Dimension()},
        {example(), Example()},
        {fundamentalRight(), FundamentalRight()},
        {keyword(), Keyword()},
        {relevantKeyword(), Keyword()},
        {principle(), Principle()},
        {requirement(), Requirement()},
        {scenario(), Scenario()},
        {useCase(), UseCase()},
    };
    for (const auto& [property, cls] : ranges) {
        store.declare(property, EntityKind::ObjectProperty);
        store.add(ObjectPropertyRange{property, cls});
    }
    store.add(SubObjectPropertyOf{relevantKeyword(), keyword()});
    store.add(make_equivalent_properties({application(), scenario(), useCase()}));

    for (const auto& ann : {method(), reference(), shortDescription(), label()}) {
        store.declare(ann, EntityKind::AnnotationProperty);
    }
    // The class table spells this class in the plural; keep that as an alias.
    store.add(AnnotationAssertion{Requirement(), label(), {"Requirements", "en"}});

    return store;
}

MetricsReport compute_metrics(const OntologyStore& store) {
    MetricsReport report;
    for (const auto& axiom : store.axioms()) {
        switch (category_of(axiom)) {
            case AxiomCategory::Declaration: {
                ++report.declarationAxiomCount;
                switch (std::get<Declaration>(axiom).kind) {
                    case EntityKind::OwlClass: ++report.classCount; break;
                    case EntityKind::ObjectProperty: ++report.objectPropertyCount; break;
                    case EntityKind::AnnotationProperty: ++report.annotationPropertyCount; break;
                    case EntityKind::DataProperty: ++report.dataPropertyCount; break;
                    case EntityKind::NamedIndividual: ++report.individualCount; break;
                }
                break;
            }
            case AxiomCategory::Logical: ++report.logicalAxiomCount; break;
            case AxiomCategory::Annotation: ++report.annotationAssertionCount; break;
        }
    }
    report.axiomCount =
        report.logicalAxiomCount + report.declarationAxiomCount + report.annotationAssertionCount;
    return report;
}

std::string format_metrics_table(const MetricsReport& r) {
    const std::pair<const char*, std::size_t> rows[] = {
        {"Axiom", r.axiomCount},
        {"Logical axioms count", r.logicalAxiomCount},
        {"Declaration axioms count", r.declarationAxiomCount},
        {"Class count", r.classCount},
        {"Object property count", r.objectPropertyCount},
        {"Data property count", r.dataPropertyCount},
        {"Individual count", r.individualCount},
        {"Annotation property count", r.annotationPropertyCount},
    };
    std::ostringstream out;
    out << std::left << std::setw(28) << "Metric" << "Value\n";
    for (const auto& [label, value] : rows) out << std::left << std::setw(28) << label << value << '\n';
    return out.str();
}

}  // namespace aieo
