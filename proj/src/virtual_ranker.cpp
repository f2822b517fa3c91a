#include "semrank/virtual_ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace semrank {

std::set<PairKey> asserted_pairs(std::span<const PageSubgraph> pages) {
    std::set<PairKey> out;
    for (const PageSubgraph& p : pages) {
        for (const auto& [pair, delta] : p.pair_deltas()) {
            if (delta > 0) out.insert(pair);
        }
    }
    return out;
}

CandidateEdgeSet inject_virtual_links(const OntologyGraph& ontology, const PageSubgraph& page,
                                      const std::set<PairKey>& corpus_pairs,
                                      const VirtualConfig& config) {
    Rational virtual_delta(1, 2);
    if (config.delta_mode == VirtualDeltaMode::half_over_page_relations) {
        virtual_delta = Rational(1, 2 * std::max(1, page.relation_count()));
    }

    CandidateEdgeSet out;
    const auto& concepts = page.concept_set();
    for (size_t i = 0; i < concepts.size(); ++i) {
        for (size_t j = i + 1; j < concepts.size(); ++j) {
            PairKey pair = make_pair_key(concepts[i], concepts[j]);
            int eta = ontology.eta(pair);
            if (eta == 0) continue;
            int delta = page.delta(pair);
            if (delta > 0) {
                out.edges.push_back({pair, Rational(delta), eta, EdgeKind::real});
            } else if (corpus_pairs.count(pair) != 0) {
                out.edges.push_back({pair, virtual_delta, eta, EdgeKind::virtual_link});
            } else {
                out.edges.push_back({pair, Rational(), eta, EdgeKind::real});
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const CandidateEdge& a, const CandidateEdge& b) { return a.pair < b.pair; });
    return out;
}

Rational node_fraction(const PageSubgraph& page, const OntologyGraph& ontology) {
    if (ontology.concept_count() == 0)
        throw std::invalid_argument("node_fraction over empty ontology");
    return Rational(static_cast<long long>(page.concept_set().size()),
                    ontology.concept_count());
}

Rational edge_fraction(const PageSubgraph& page, const OntologyGraph& ontology) {
    if (ontology.pair_count() == 0) return Rational();
    long long positive_pairs = 0;
    for (const auto& [pair, delta] : page.pair_deltas()) {
        if (delta > 0) ++positive_pairs;
    }
    return Rational(positive_pairs, ontology.pair_count());
}

ScoredPage virtual_page_score(const OntologyGraph& ontology, const PageSubgraph& page,
                              const std::set<PairKey>& corpus_pairs, const VirtualConfig& config,
                              Method variant) {
    if (variant != Method::nodes && variant != Method::edges && variant != Method::combined)
        throw std::invalid_argument("virtual_page_score variant must be nodes, edges or combined");

    CandidateScore base =
        score_candidates(inject_virtual_links(ontology, page, corpus_pairs, config));

    ScoredPage sp;
    sp.page_id = page.id();
    sp.method = variant;
    sp.chosen_length = base.chosen_length;
    sp.probability = base.probability;
    sp.score = base.score;
    if (variant == Method::nodes || variant == Method::combined) {
        sp.bonus_nodes = node_fraction(page, ontology);
        sp.score += sp.bonus_nodes;
    }
    if (variant == Method::edges || variant == Method::combined) {
        sp.bonus_edges = edge_fraction(page, ontology);
        sp.score += sp.bonus_edges;
    }
    return sp;
}

}  // namespace semrank
