#ifndef SEMRANK_GRAPH_MODEL_HPP
#define SEMRANK_GRAPH_MODEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semrank/rational.hpp"

namespace semrank {

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Dense concept index into the ontology's label table.
using ConceptId = std::int32_t;

// Unordered concept pair, stored normalized (lo < hi).
struct PairKey {
    ConceptId lo = 0;
    ConceptId hi = 0;
    auto operator<=>(const PairKey&) const = default;
};

inline PairKey make_pair_key(ConceptId a, ConceptId b) {
    return a < b ? PairKey{a, b} : PairKey{b, a};
}

// One uniquely identified semantic relation between two distinct concepts.
struct RelationEdge {
    std::string id;
    ConceptId source = 0;
    ConceptId target = 0;

    PairKey pair() const { return make_pair_key(source, target); }
};

// Undirected concept multigraph: the environment's knowledge base.
// Immutable after construction; eta(i,j) counts parallel relations per pair.
class OntologyGraph {
public:
    OntologyGraph() = default;  // empty graph; fill via make()

    static OntologyGraph make(std::vector<std::string> concept_labels,
                              std::vector<RelationEdge> relations);

    int concept_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& concept_labels() const { return labels_; }
    const std::vector<RelationEdge>& relations() const { return relations_; }

    bool valid_concept(ConceptId c) const { return c >= 0 && c < concept_count(); }

    // Number of parallel relations between the pair's endpoints (0 if none).
    int eta(PairKey pair) const {
        auto it = multiplicity_.find(pair);
        return it == multiplicity_.end() ? 0 : it->second;
    }

    const std::map<PairKey, int>& pair_multiplicities() const { return multiplicity_; }
    int pair_count() const { return static_cast<int>(multiplicity_.size()); }

    const RelationEdge* find_relation(std::string_view id) const;

private:
    std::vector<std::string> labels_;
    std::vector<RelationEdge> relations_;  // sorted by id
    std::map<PairKey, int> multiplicity_;
};

// One annotated page: a subset of ontology relations (by id) plus concepts
// annotated without any relation. delta(i,j) is derived from the id set.
class PageSubgraph {
public:
    static PageSubgraph make(std::string page_id, std::vector<std::string> relation_ids,
                             std::vector<ConceptId> extra_concepts,
                             const OntologyGraph& ontology);

    const std::string& id() const { return id_; }
    const std::vector<std::string>& relation_ids() const { return relation_ids_; }
    const std::vector<ConceptId>& extra_concepts() const { return extra_concepts_; }

    int relation_count() const { return static_cast<int>(relation_ids_.size()); }

    int delta(PairKey pair) const {
        auto it = deltas_.find(pair);
        return it == deltas_.end() ? 0 : it->second;
    }
    const std::map<PairKey, int>& pair_deltas() const { return deltas_; }

    // C_p: endpoints of page relations plus isolated extra concepts (sorted).
    const std::vector<ConceptId>& concept_set() const { return concepts_; }

private:
    PageSubgraph() = default;

    std::string id_;
    std::vector<std::string> relation_ids_;   // sorted, unique
    std::vector<ConceptId> extra_concepts_;   // sorted, unique
    std::map<PairKey, int> deltas_;
    std::vector<ConceptId> concepts_;
};

// Ordered term->concept associations chosen by the user.
class Query {
public:
    struct Association {
        std::string term;
        ConceptId concept_id = 0;
    };

    static Query make(std::vector<Association> associations, const OntologyGraph& ontology);

    const std::vector<Association>& associations() const { return associations_; }
    const std::vector<ConceptId>& concept_set() const { return concepts_; }

private:
    Query() = default;

    std::vector<Association> associations_;
    std::vector<ConceptId> concepts_;  // sorted, unique
};

enum class EdgeKind { real, virtual_link };

// One weighted candidate edge of the per-(page,method) simple-graph view.
struct CandidateEdge {
    PairKey pair;
    Rational delta;
    int eta = 1;
    EdgeKind kind = EdgeKind::real;

    Rational probability() const { return delta / Rational(eta); }
};

struct CandidateEdgeSet {
    std::vector<CandidateEdge> edges;  // sorted by pair key

    int size() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }
};

// Baseline (query-scope) view: every ontology pair within C_Q, with the
// page's delta; zero-delta pairs stay in as zero-probability candidates.
CandidateEdgeSet query_candidates(const OntologyGraph& ontology, const PageSubgraph& page,
                                  const Query& query);

// Page-scope view: only the pairs the page actually annotates (delta >= 1).
CandidateEdgeSet page_candidates(const OntologyGraph& ontology, const PageSubgraph& page);

}  // namespace semrank

#endif
