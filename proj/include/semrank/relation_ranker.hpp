#ifndef SEMRANK_RELATION_RANKER_HPP
#define SEMRANK_RELATION_RANKER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "semrank/forest_engine.hpp"
#include "semrank/graph_model.hpp"

namespace semrank {

enum class Method { old_method, nodes, edges, combined, eigenvector };

std::string_view method_name(Method m);

// One page's score under one method. score = probability + chosen_length
// + bonus_nodes + bonus_edges, all exact.
struct ScoredPage {
    std::string page_id;
    Method method = Method::old_method;
    int chosen_length = 0;
    Rational probability;
    Rational score;
    Rational bonus_nodes;
    Rational bonus_edges;
};

// P(Q,p,l): weight_sum / tree_count at the given length (0 when no trees).
Rational constrained_score(const CandidateEdgeSet& candidates, int length);

// The shared length scan: walk l from the structural maximum down to 1 and
// keep the first nonzero constrained score. Fallback when every length is
// zero: probability 0 at the structural maximum (score = length alone);
// a candidate-free set scores 0.
struct CandidateScore {
    int chosen_length = 0;
    Rational probability;
    Rational score;
};
CandidateScore score_candidates(const CandidateEdgeSet& candidates);

// Old-method page score over the query-scope candidate view.
ScoredPage baseline_page_score(const OntologyGraph& ontology, const PageSubgraph& page,
                               const Query& query);

// Presentation-side rank entry; exact values are rendered before ordering
// decisions are lost.
struct RankEntry {
    std::string page_id;
    double score_value = 0.0;
    std::string score_display;  // 5 decimal places, rounded from the exact value
    std::string score_exact;    // "n/d" for rational methods, full-precision decimal for eigen
    int chosen_length = 0;
    double probability = 0.0;
    double bonus_nodes = 0.0;
    double bonus_edges = 0.0;
};

struct RankReport {
    Method method = Method::old_method;
    std::vector<RankEntry> entries;                   // descending score, ties by page id
    std::vector<std::vector<std::string>> tie_groups;  // only groups of size >= 2

    // populated by the eigenvector method
    double eigenvalue = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool used_max_norm_fallback = false;
};

// Orders exact scores descending, ties broken by ascending page id and
// recorded as groups. All entries must carry the same method tag.
RankReport rank(const std::vector<ScoredPage>& scored);

}  // namespace semrank

#endif
