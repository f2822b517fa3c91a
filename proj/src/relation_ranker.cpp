#include "semrank/relation_ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace semrank {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::old_method: return "old";
        case Method::nodes: return "nodes";
        case Method::edges: return "edges";
        case Method::combined: return "combined";
        case Method::eigenvector: return "eigen";
    }
    return "?";
}

Rational constrained_score(const CandidateEdgeSet& candidates, int length) {
    if (length < 1) throw std::invalid_argument("constrained_score needs length >= 1");
    LengthAggregate agg = aggregate(candidates, length);
    if (agg.tree_count == 0) return Rational();
    return agg.weight_sum / Rational(agg.tree_count);
}

CandidateScore score_candidates(const CandidateEdgeSet& candidates) {
    CandidateScore result;
    int structural_max = max_structural_length(candidates, false);
    for (int l = structural_max; l >= 1; --l) {
        Rational p = constrained_score(candidates, l);
        if (p.is_positive()) {
            result.chosen_length = l;
            result.probability = p;
            result.score = p + Rational(l);
            return result;
        }
    }
    result.chosen_length = structural_max;
    result.probability = Rational();
    result.score = Rational(structural_max);
    return result;
}

ScoredPage baseline_page_score(const OntologyGraph& ontology, const PageSubgraph& page,
                               const Query& query) {
    CandidateScore cs = score_candidates(query_candidates(ontology, page, query));
    ScoredPage sp;
    sp.page_id = page.id();
    sp.method = Method::old_method;
    sp.chosen_length = cs.chosen_length;
    sp.probability = cs.probability;
    sp.score = cs.score;
    return sp;
}

RankReport rank(const std::vector<ScoredPage>& scored) {
    for (const ScoredPage& sp : scored) {
        if (sp.method != scored.front().method)
            throw std::invalid_argument("rank() requires one method per report");
    }

    std::vector<const ScoredPage*> order;
    order.reserve(scored.size());
    for (const ScoredPage& sp : scored) order.push_back(&sp);
    std::sort(order.begin(), order.end(), [](const ScoredPage* a, const ScoredPage* b) {
        int c = a->score.compare(b->score);
        if (c != 0) return c > 0;
        return a->page_id < b->page_id;
    });

    RankReport report;
    if (!scored.empty()) report.method = scored.front().method;
    for (const ScoredPage* sp : order) {
        RankEntry e;
        e.page_id = sp->page_id;
        e.score_value = sp->score.to_double();
        e.score_display = sp->score.to_decimal(5);
        e.score_exact = sp->score.to_fraction_string();
        e.chosen_length = sp->chosen_length;
        e.probability = sp->probability.to_double();
        e.bonus_nodes = sp->bonus_nodes.to_double();
        e.bonus_edges = sp->bonus_edges.to_double();
        report.entries.push_back(std::move(e));
    }

    size_t i = 0;
    while (i < order.size()) {
        size_t j = i + 1;
        while (j < order.size() && order[j]->score == order[i]->score) ++j;
        if (j - i >= 2) {
            std::vector<std::string> group;
            for (size_t k = i; k < j; ++k) group.push_back(order[k]->page_id);
            report.tie_groups.push_back(std::move(group));
        }
        i = j;
    }
    return report;
}

}  // namespace semrank
