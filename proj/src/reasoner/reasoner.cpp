#include "aieo/reasoner.hpp"

#include "aieo/detail/overloaded.hpp"
#include "aieo/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace aieo {

using detail::Overloaded;

std::string_view to_string(RuleId rule) {
    switch (rule) {
        case RuleId::RangeTyping: return "R1_RangeTyping";
        case RuleId::DomainTyping: return "R1D_DomainTyping";
        case RuleId::SubClass: return "R2_SubClass";
        case RuleId::ClassEquivalence: return "R3_ClassEquiv";
        case RuleId::PropertyEquivalence: return "R4_PropEquiv";
        case RuleId::SubProperty: return "R5_SubProp";
        case RuleId::SameIndividual: return "R6_SameIndividual";
        case RuleId::DisjointTyping: return "D1_DisjointTyping";
        case RuleId::SameAsDisjoint: return "D2_SameAsDisjoint";
    }
    return "?";
}

namespace {

template <class K, class V>
const std::vector<V>& find_or_empty(const std::map<K, std::vector<V>>& map, const K& key) {
    static const std::vector<V> empty;
    auto it = map.find(key);
    return it == map.end() ? empty : it->second;
}

template <class K, class V>
const std::set<V>& find_or_empty(const std::map<K, std::set<V>>& map, const K& key) {
    static const std::set<V> empty;
    auto it = map.find(key);
    return it == map.end() ? empty : it->second;
}

// Schema axioms that act as rule premises, indexed for both directions.
struct Schema {
    std::map<Iri, std::vector<ObjectPropertyRange>> ranges;
    std::map<Iri, std::vector<ObjectPropertyDomain>> domains;
    std::map<Iri, std::vector<SubClassOf>> supers;  // by sub
    std::map<Iri, std::vector<SubClassOf>> subs;    // by sup
    std::map<Iri, std::vector<EquivalentClasses>> class_equivalences;
    std::map<Iri, std::vector<EquivalentObjectProperties>> property_equivalences;
    std::map<Iri, std::vector<SubObjectPropertyOf>> super_properties;  // by sub
    std::map<Iri, std::vector<SubObjectPropertyOf>> sub_properties;    // by sup

    explicit Schema(const OntologyStore& store) {
        for (const auto& axiom : store.axioms()) {
            std::visit(Overloaded{
                           [&](const ObjectPropertyRange& ax) { ranges[ax.property].push_back(ax); },
                           [&](const ObjectPropertyDomain& ax) { domains[ax.property].push_back(ax); },
                           [&](const SubClassOf& ax) {
                               supers[ax.sub].push_back(ax);
                               subs[ax.sup].push_back(ax);
                           },
                           [&](const EquivalentClasses& ax) {
                               for (const auto& c : ax.classes) class_equivalences[c].push_back(ax);
                           },
                           [&](const EquivalentObjectProperties& ax) {
                               for (const auto& p : ax.properties) property_equivalences[p].push_back(ax);
                           },
                           [&](const SubObjectPropertyOf& ax) {
                               super_properties[ax.sub].push_back(ax);
                               sub_properties[ax.sup].push_back(ax);
                           },
                           [](const auto&) {},
                       },
                       axiom);
        }
    }
};

// Assertion-level facts with the lookups the rules need.
struct Facts {
    std::set<ClassAssertion> types;
    std::set<ObjectPropertyAssertion> assertions;
    std::set<SameIndividual> same;
    std::map<Iri, std::set<Iri>> types_of;
    std::map<Iri, std::set<ObjectPropertyAssertion>> by_subject;
    std::map<Iri, std::set<ObjectPropertyAssertion>> by_object;
    std::map<Iri, std::set<Iri>> same_as;

    static bool is_fact(const Axiom& axiom) {
        return std::holds_alternative<ClassAssertion>(axiom) || std::holds_alternative<ObjectPropertyAssertion>(axiom) ||
               std::holds_alternative<SameIndividual>(axiom);
    }

    bool contains(const Axiom& axiom) const {
        if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) return types.count(*ca) > 0;
        if (const auto* pa = std::get_if<ObjectPropertyAssertion>(&axiom)) return assertions.count(*pa) > 0;
        if (const auto* si = std::get_if<SameIndividual>(&axiom)) return same.count(*si) > 0;
        return false;
    }

    bool insert(const Axiom& axiom) {
        if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) {
            if (!types.insert(*ca).second) return false;
            types_of[ca->individual].insert(ca->cls);
            return true;
        }
        if (const auto* pa = std::get_if<ObjectPropertyAssertion>(&axiom)) {
            if (!assertions.insert(*pa).second) return false;
            by_subject[pa->subject].insert(*pa);
            by_object[pa->object].insert(*pa);
            return true;
        }
        if (const auto* si = std::get_if<SameIndividual>(&axiom)) {
            if (!same.insert(*si).second) return false;
            same_as[si->first].insert(si->second);
            same_as[si->second].insert(si->first);
            return true;
        }
        return false;
    }
};

using Emit = std::function<void(Axiom)>;

// Forward step: every conclusion with `fact` among its premises, joined
// against the schema and the current facts.
void derive(const Axiom& fact, const Schema& schema, const Facts& facts, bool same_rule, const Emit& emit) {
    if (const auto* ca = std::get_if<ClassAssertion>(&fact)) {
        for (const auto& sc : find_or_empty(schema.supers, ca->cls)) emit(ClassAssertion{sc.sup, ca->individual});
        for (const auto& eq : find_or_empty(schema.class_equivalences, ca->cls)) {
            for (const auto& other : eq.classes) {
                if (other != ca->cls) emit(ClassAssertion{other, ca->individual});
            }
        }
        if (same_rule) {
            for (const auto& peer : find_or_empty(facts.same_as, ca->individual)) emit(ClassAssertion{ca->cls, peer});
        }
    } else if (const auto* pa = std::get_if<ObjectPropertyAssertion>(&fact)) {
        for (const auto& r : find_or_empty(schema.ranges, pa->property)) emit(ClassAssertion{r.cls, pa->object});
        for (const auto& d : find_or_empty(schema.domains, pa->property)) emit(ClassAssertion{d.cls, pa->subject});
        for (const auto& eq : find_or_empty(schema.property_equivalences, pa->property)) {
            for (const auto& other : eq.properties) {
                if (other != pa->property) emit(ObjectPropertyAssertion{pa->subject, other, pa->object});
            }
        }
        for (const auto& sp : find_or_empty(schema.super_properties, pa->property)) {
            emit(ObjectPropertyAssertion{pa->subject, sp.sup, pa->object});
        }
        if (same_rule) {
            for (const auto& peer : find_or_empty(facts.same_as, pa->subject)) {
                emit(ObjectPropertyAssertion{peer, pa->property, pa->object});
            }
            for (const auto& peer : find_or_empty(facts.same_as, pa->object)) {
                emit(ObjectPropertyAssertion{pa->subject, pa->property, peer});
            }
        }
    } else if (const auto* si = std::get_if<SameIndividual>(&fact)) {
        if (!same_rule) return;
        for (const auto& [from, to] : {std::pair{si->first, si->second}, std::pair{si->second, si->first}}) {
            for (const auto& cls : find_or_empty(facts.types_of, from)) emit(ClassAssertion{cls, to});
            for (const auto& pa : find_or_empty(facts.by_subject, from)) {
                emit(ObjectPropertyAssertion{to, pa.property, pa.object});
            }
            for (const auto& pa : find_or_empty(facts.by_object, from)) {
                emit(ObjectPropertyAssertion{pa.subject, pa.property, to});
            }
            for (const auto& other : find_or_empty(facts.same_as, from)) {
                if (other != to) emit(make_same(to, other));
            }
        }
    }
}

// Backward step: every rule instantiation whose conclusion is `fact`.
std::vector<InferenceTrace> instantiations(const Axiom& fact, const Schema& schema, const Facts& facts,
                                           bool same_rule) {
    std::vector<InferenceTrace> out;
    auto add = [&](RuleId rule, std::vector<Axiom> premises) { out.push_back({fact, rule, std::move(premises)}); };

    if (const auto* ca = std::get_if<ClassAssertion>(&fact)) {
        const Iri& x = ca->individual;
        for (const auto& pa : find_or_empty(facts.by_object, x)) {
            for (const auto& r : find_or_empty(schema.ranges, pa.property)) {
                if (r.cls == ca->cls) add(RuleId::RangeTyping, {pa, r});
            }
        }
        for (const auto& pa : find_or_empty(facts.by_subject, x)) {
            for (const auto& d : find_or_empty(schema.domains, pa.property)) {
                if (d.cls == ca->cls) add(RuleId::DomainTyping, {pa, d});
            }
        }
        const auto& xtypes = find_or_empty(facts.types_of, x);
        for (const auto& sc : find_or_empty(schema.subs, ca->cls)) {
            if (xtypes.count(sc.sub)) add(RuleId::SubClass, {ClassAssertion{sc.sub, x}, sc});
        }
        for (const auto& eq : find_or_empty(schema.class_equivalences, ca->cls)) {
            for (const auto& other : eq.classes) {
                if (other != ca->cls && xtypes.count(other)) add(RuleId::ClassEquivalence, {ClassAssertion{other, x}, eq});
            }
        }
        if (same_rule) {
            for (const auto& peer : find_or_empty(facts.same_as, x)) {
                if (find_or_empty(facts.types_of, peer).count(ca->cls)) {
                    add(RuleId::SameIndividual, {make_same(x, peer), ClassAssertion{ca->cls, peer}});
                }
            }
        }
    } else if (const auto* pa = std::get_if<ObjectPropertyAssertion>(&fact)) {
        for (const auto& eq : find_or_empty(schema.property_equivalences, pa->property)) {
            for (const auto& other : eq.properties) {
                ObjectPropertyAssertion premise{pa->subject, other, pa->object};
                if (other != pa->property && facts.assertions.count(premise)) {
                    add(RuleId::PropertyEquivalence, {premise, eq});
                }
            }
        }
        for (const auto& sp : find_or_empty(schema.sub_properties, pa->property)) {
            ObjectPropertyAssertion premise{pa->subject, sp.sub, pa->object};
            if (facts.assertions.count(premise)) add(RuleId::SubProperty, {premise, sp});
        }
        if (same_rule) {
            for (const auto& peer : find_or_empty(facts.same_as, pa->subject)) {
                ObjectPropertyAssertion premise{peer, pa->property, pa->object};
                if (facts.assertions.count(premise)) add(RuleId::SameIndividual, {make_same(pa->subject, peer), premise});
            }
            for (const auto& peer : find_or_empty(facts.same_as, pa->object)) {
                ObjectPropertyAssertion premise{pa->subject, pa->property, peer};
                if (facts.assertions.count(premise)) add(RuleId::SameIndividual, {make_same(pa->object, peer), premise});
            }
        }
    } else if (const auto* si = std::get_if<SameIndividual>(&fact)) {
        if (same_rule) {
            for (const auto& middle : find_or_empty(facts.same_as, si->first)) {
                if (middle == si->second) continue;
                if (find_or_empty(facts.same_as, middle).count(si->second)) {
                    std::vector<Axiom> premises{make_same(si->first, middle), make_same(middle, si->second)};
                    std::sort(premises.begin(), premises.end());
                    add(RuleId::SameIndividual, std::move(premises));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Closure {
    Facts facts;
    std::set<Axiom> inferred;
    std::map<Axiom, int> rank;  // round in which a fact first appeared; asserted facts are 0
};

Closure close(const OntologyStore& store, const Schema& schema, const ReasonerOptions& options) {
    Closure c;
    std::vector<Axiom> delta;
    for (const auto& axiom : store.axioms()) {
        if (Facts::is_fact(axiom) && c.facts.insert(axiom)) {
            c.rank[axiom] = 0;
            delta.push_back(axiom);
        }
    }
    int round = 0;
    while (!delta.empty()) {
        std::set<Axiom> pending;
        for (const auto& fact : delta) {
            derive(fact, schema, c.facts, options.applySameIndividual, [&](Axiom conclusion) {
                if (!c.facts.contains(conclusion)) pending.insert(std::move(conclusion));
            });
        }
        ++round;
        delta.assign(pending.begin(), pending.end());
        for (const auto& fact : delta) {
            c.facts.insert(fact);
            c.rank[fact] = round;
            c.inferred.insert(fact);
        }
        if (c.inferred.size() > options.maxDerivedFacts) {
            throw Error(ErrorCode::IterationLimitExceeded,
                        "more than " + std::to_string(options.maxDerivedFacts) + " derived facts");
        }
    }
    return c;
}

std::vector<ConsistencyViolation> violations_of(const OntologyStore& base, const Facts& facts,
                                                const std::map<Axiom, std::vector<InferenceTrace>>& traces,
                                                const Facts* without_same) {
    std::vector<ConsistencyViolation> out;
    for (const auto& dj : base.all<DisjointClasses>()) {
        for (const auto& [individual, classes] : facts.types_of) {
            if (!classes.count(dj.first) || !classes.count(dj.second)) continue;
            ConsistencyViolation v{individual, dj.first, dj.second, RuleId::DisjointTyping, {}};
            if (without_same) {
                const auto& plain = find_or_empty(without_same->types_of, individual);
                if (!plain.count(dj.first) || !plain.count(dj.second)) v.rule = RuleId::SameAsDisjoint;
            }
            for (const auto& cls : {dj.first, dj.second}) {
                auto it = traces.find(ClassAssertion{cls, individual});
                if (it != traces.end()) v.traces.insert(v.traces.end(), it->second.begin(), it->second.end());
            }
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end(), [](const ConsistencyViolation& l, const ConsistencyViolation& r) {
        return std::tie(l.individual, l.classA, l.classB) < std::tie(r.individual, r.classA, r.classB);
    });
    return out;
}

Facts facts_of(const Materialization& mat) {
    Facts facts;
    for (const auto& ca : mat.class_assertions()) facts.insert(ca);
    for (const auto& pa : mat.property_assertions()) facts.insert(pa);
    for (const auto& si : mat.same_individuals()) facts.insert(si);
    return facts;
}

}  // namespace

bool Materialization::contains(const Axiom& axiom) const {
    return base_->contains(axiom) || inferred_.count(normalize(axiom)) > 0;
}

std::set<Iri> Materialization::types_of(const Iri& individual) const {
    return find_or_empty(types_by_individual_, individual);
}

std::set<Iri> Materialization::members_of(const Iri& cls) const { return find_or_empty(members_by_class_, cls); }

std::set<Iri> Materialization::same_as(const Iri& individual) const {
    return find_or_empty(same_by_individual_, individual);
}

OntologyStore Materialization::to_store() const {
    OntologyStore store = *base_;
    for (const auto& axiom : inferred_) store.add(axiom);
    return store;
}

Materialization materialize(const OntologyStore& store, const ReasonerOptions& options) {
    store.validate();
    Materialization mat;
    mat.base_ = std::make_shared<const OntologyStore>(store);
    const Schema schema(store);
    Closure closure = close(store, schema, options);

    for (const auto& fact : closure.inferred) {
        const int rank = closure.rank.at(fact);
        std::vector<InferenceTrace> kept;
        for (auto& trace : instantiations(fact, schema, closure.facts, options.applySameIndividual)) {
            bool earlier = std::all_of(trace.premises.begin(), trace.premises.end(), [&](const Axiom& p) {
                auto it = closure.rank.find(p);
                return it == closure.rank.end() || it->second < rank;
            });
            if (earlier) kept.push_back(std::move(trace));
        }
        mat.traces_.emplace(fact, std::move(kept));
    }

    mat.inferred_ = std::move(closure.inferred);
    mat.class_assertions_ = closure.facts.types;
    mat.property_assertions_ = closure.facts.assertions;
    mat.same_individuals_ = closure.facts.same;
    for (const auto& ca : mat.class_assertions_) {
        mat.types_by_individual_[ca.individual].insert(ca.cls);
        mat.members_by_class_[ca.cls].insert(ca.individual);
    }
    mat.same_by_individual_ = closure.facts.same_as;

    if (options.checkConsistency) mat.violations_ = check_consistency(mat);
    return mat;
}

std::vector<ConsistencyViolation> check_consistency(const Materialization& mat) {
    const Facts facts = facts_of(mat);
    const OntologyStore& base = mat.base();
    if (base.all<SameIndividual>().empty()) return violations_of(base, facts, mat.traces(), nullptr);
    ReasonerOptions plain;
    plain.applySameIndividual = false;
    plain.checkConsistency = false;
    const Materialization unmerged = materialize(base, plain);
    const Facts unmerged_facts = facts_of(unmerged);
    return violations_of(base, facts, mat.traces(), &unmerged_facts);
}

std::vector<InferenceTrace> explain(const Materialization& mat, const Axiom& raw) {
    const Axiom fact = normalize(raw);
    if (mat.is_asserted(fact)) return {};
    if (!mat.inferred().count(fact)) {
        throw Error(ErrorCode::UnknownFact, to_string(fact, mat.base().prefixes()) + " is not in the materialization");
    }
    const Schema schema(mat.base());
    return instantiations(fact, schema, facts_of(mat), true);
}

std::vector<std::vector<Iri>> equivalence_classes(const OntologyStore& store, EquivalenceKind kind) {
    const EntityKind entity = kind == EquivalenceKind::Class      ? EntityKind::OwlClass
                              : kind == EquivalenceKind::Property ? EntityKind::ObjectProperty
                                                                  : EntityKind::NamedIndividual;
    const std::vector<Iri> members = store.entities(entity);
    std::map<Iri, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    auto unite = [&](const std::vector<Iri>& iris) {
        for (std::size_t i = 1; i < iris.size(); ++i) parent[find(index.at(iris[i]))] = find(index.at(iris[0]));
    };
    for (const auto& axiom : store.axioms()) {
        if (kind == EquivalenceKind::Class) {
            if (const auto* eq = std::get_if<EquivalentClasses>(&axiom)) unite(eq->classes);
        } else if (kind == EquivalenceKind::Property) {
            if (const auto* eq = std::get_if<EquivalentObjectProperties>(&axiom)) unite(eq->properties);
        } else if (const auto* si = std::get_if<SameIndividual>(&axiom)) {
            unite({si->first, si->second});
        }
    }
    std::map<std::size_t, std::vector<Iri>> blocks;
    for (std::size_t i = 0; i < members.size(); ++i) blocks[find(i)].push_back(members[i]);
    std::vector<std::vector<Iri>> out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aieo
