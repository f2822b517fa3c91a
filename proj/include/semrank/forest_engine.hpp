#ifndef SEMRANK_FOREST_ENGINE_HPP
#define SEMRANK_FOREST_ENGINE_HPP

#include <stdexcept>
#include <vector>

#include "semrank/graph_model.hpp"

namespace semrank {

// Hard ceiling on candidate-set size for any enumeration; worst case is
// exponential in the edge count.
inline constexpr int kEnumerationCap = 24;

// Tighter ceiling for the exhaustive subset oracle.
inline constexpr int kBruteForceCap = 16;

class CapExceededError : public std::runtime_error {
public:
    CapExceededError(int count, int cap)
        : std::runtime_error("candidate set of " + std::to_string(count) +
                             " edges exceeds the enumeration cap of " + std::to_string(cap)),
          candidate_count(count) {}
    int candidate_count;
};

// A connected acyclic edge subset of a candidate graph; edges sorted by pair key.
struct TreeSubset {
    std::vector<PairKey> edges;
    int length() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const TreeSubset& a, const TreeSubset& b) { return a.edges == b.edges; }
    friend bool operator<(const TreeSubset& a, const TreeSubset& b) { return a.edges < b.edges; }
};

// Sum of per-tree probability products and tree count at one length.
struct LengthAggregate {
    int length = 0;
    Rational weight_sum;
    long tree_count = 0;
};

// Every connected acyclic subset of exactly `length` candidate edges, in
// lexicographic order of sorted pair keys. Throws CapExceededError above
// kEnumerationCap.
std::vector<TreeSubset> enumerate_trees(const CandidateEdgeSet& candidates, int length);

LengthAggregate aggregate(const CandidateEdgeSet& candidates, int length);

// Largest length with at least one tree; 0 when no edges qualify.
// positive_only restricts the edge pool to candidates with delta > 0.
int max_structural_length(const CandidateEdgeSet& candidates, bool positive_only);

// Independent oracle: filters all C(E, length) subsets by an adjacency-DFS
// tree check. Shares no traversal code with enumerate_trees.
std::vector<TreeSubset> brute_force_trees(const CandidateEdgeSet& candidates, int length);

}  // namespace semrank

#endif
