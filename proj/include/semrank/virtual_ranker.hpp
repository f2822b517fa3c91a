#ifndef SEMRANK_VIRTUAL_RANKER_HPP
#define SEMRANK_VIRTUAL_RANKER_HPP

#include <set>
#include <span>

#include "semrank/relation_ranker.hpp"

namespace semrank {

// Weight rule for an injected virtual edge: a flat delta of 1/2, or 1/2
// divided by the page's real relation count.
enum class VirtualDeltaMode { constant_half, half_over_page_relations };

struct VirtualConfig {
    VirtualDeltaMode delta_mode = VirtualDeltaMode::constant_half;
};

// Pairs carrying at least one page relation anywhere in the environment.
// A pair a page does not annotate can only turn virtual when some other
// page asserts it; an ontology pair nobody annotates stays a zero-weight
// candidate (it still shapes the forest divisor, like the baseline view's
// zero-delta query pairs).
std::set<PairKey> asserted_pairs(std::span<const PageSubgraph> pages);

// Full page-scope candidate view with virtual links injected: every
// ontology pair inside C_p appears once: real when the page annotates it,
// virtual (reduced weight) when only other pages do, zero-weight otherwise.
// Pairs without ontology relations never appear.
CandidateEdgeSet inject_virtual_links(const OntologyGraph& ontology, const PageSubgraph& page,
                                      const std::set<PairKey>& corpus_pairs,
                                      const VirtualConfig& config);

// |C_p| / |C|.
Rational node_fraction(const PageSubgraph& page, const OntologyGraph& ontology);

// Distinct page pairs with delta > 0 over distinct ontology pairs.
Rational edge_fraction(const PageSubgraph& page, const OntologyGraph& ontology);

// New-method score: the baseline-style length scan over the virtual-link
// view, plus the node and/or edge fraction bonus. variant must be nodes,
// edges or combined.
ScoredPage virtual_page_score(const OntologyGraph& ontology, const PageSubgraph& page,
                              const std::set<PairKey>& corpus_pairs, const VirtualConfig& config,
                              Method variant);

}  // namespace semrank

#endif
