#include "semrank/graph_model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace semrank {

OntologyGraph OntologyGraph::make(std::vector<std::string> concept_labels,
                                  std::vector<RelationEdge> relations) {
    OntologyGraph g;
    g.labels_ = std::move(concept_labels);

    std::sort(relations.begin(), relations.end(),
              [](const RelationEdge& a, const RelationEdge& b) { return a.id < b.id; });

    std::unordered_set<std::string> seen;
    for (const RelationEdge& r : relations) {
        if (r.id.empty()) throw ValidationError("relation with empty id");
        if (!seen.insert(r.id).second)
            throw ValidationError("duplicate relation id \"" + r.id + "\"");
        if (!g.valid_concept(r.source) || !g.valid_concept(r.target))
            throw ValidationError("relation \"" + r.id + "\" references unknown concept");
        if (r.source == r.target)
            throw ValidationError("relation \"" + r.id + "\" is a self-loop");
        g.multiplicity_[r.pair()] += 1;
    }
    g.relations_ = std::move(relations);
    return g;
}

const RelationEdge* OntologyGraph::find_relation(std::string_view id) const {
    auto it = std::lower_bound(relations_.begin(), relations_.end(), id,
                               [](const RelationEdge& r, std::string_view v) { return r.id < v; });
    if (it == relations_.end() || it->id != id) return nullptr;
    return &*it;
}

PageSubgraph PageSubgraph::make(std::string page_id, std::vector<std::string> relation_ids,
                                std::vector<ConceptId> extra_concepts,
                                const OntologyGraph& ontology) {
    PageSubgraph p;
    p.id_ = std::move(page_id);
    if (p.id_.empty()) throw ValidationError("page with empty id");

    std::sort(relation_ids.begin(), relation_ids.end());
    for (size_t i = 1; i < relation_ids.size(); ++i) {
        if (relation_ids[i] == relation_ids[i - 1])
            throw ValidationError("page \"" + p.id_ + "\" annotates relation \"" +
                                  relation_ids[i] + "\" more than once");
    }

    std::set<ConceptId> touched;
    for (const std::string& rid : relation_ids) {
        const RelationEdge* rel = ontology.find_relation(rid);
        if (rel == nullptr)
            throw ValidationError("page \"" + p.id_ + "\" references unknown relation id \"" +
                                  rid + "\"");
        p.deltas_[rel->pair()] += 1;
        touched.insert(rel->source);
        touched.insert(rel->target);
    }
    p.relation_ids_ = std::move(relation_ids);

    std::sort(extra_concepts.begin(), extra_concepts.end());
    extra_concepts.erase(std::unique(extra_concepts.begin(), extra_concepts.end()),
                         extra_concepts.end());
    for (ConceptId c : extra_concepts) {
        if (!ontology.valid_concept(c))
            throw ValidationError("page \"" + p.id_ + "\" lists unknown concept index " +
                                  std::to_string(c));
        if (touched.count(c) != 0)
            throw ValidationError("page \"" + p.id_ + "\" lists concept " + std::to_string(c) +
                                  " as isolated but a page relation touches it");
    }
    p.extra_concepts_ = std::move(extra_concepts);

    for (ConceptId c : p.extra_concepts_) touched.insert(c);
    p.concepts_.assign(touched.begin(), touched.end());
    return p;
}

Query Query::make(std::vector<Association> associations, const OntologyGraph& ontology) {
    if (associations.empty()) throw ValidationError("query with no term associations");
    Query q;
    std::set<ConceptId> concepts;
    for (const Association& a : associations) {
        if (!ontology.valid_concept(a.concept_id))
            throw ValidationError("query term \"" + a.term + "\" associates unknown concept index " +
                                  std::to_string(a.concept_id));
        concepts.insert(a.concept_id);
    }
    q.associations_ = std::move(associations);
    q.concepts_.assign(concepts.begin(), concepts.end());
    return q;
}

CandidateEdgeSet query_candidates(const OntologyGraph& ontology, const PageSubgraph& page,
                                  const Query& query) {
    CandidateEdgeSet out;
    const auto& concepts = query.concept_set();
    for (size_t i = 0; i < concepts.size(); ++i) {
        for (size_t j = i + 1; j < concepts.size(); ++j) {
            PairKey pair = make_pair_key(concepts[i], concepts[j]);
            int eta = ontology.eta(pair);
            if (eta == 0) continue;
            out.edges.push_back({pair, Rational(page.delta(pair)), eta, EdgeKind::real});
        }
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const CandidateEdge& a, const CandidateEdge& b) { return a.pair < b.pair; });
    return out;
}

CandidateEdgeSet page_candidates(const OntologyGraph& ontology, const PageSubgraph& page) {
    CandidateEdgeSet out;
    for (const auto& [pair, delta] : page.pair_deltas()) {
        if (delta < 1) continue;
        out.edges.push_back({pair, Rational(delta), ontology.eta(pair), EdgeKind::real});
    }
    return out;
}

}  // namespace semrank
