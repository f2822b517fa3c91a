#include "doctest.h"

#include <cstdio>

#include "semrank/golden.hpp"
#include "semrank/virtual_ranker.hpp"

using namespace semrank;

TEST_CASE("virtual injection over the travel pages") {
    Environment env = travel_virtual_environment();
    auto corpus = asserted_pairs(env.pages);

    SUBCASE("page 2 gains one virtual edge, keeps the unasserted pair at zero") {
        CandidateEdgeSet set =
            inject_virtual_links(env.ontology, env.pages[1], corpus, VirtualConfig{});
        REQUIRE(set.size() == 3);
        CHECK(set.edges[0].pair == PairKey{0, 1});
        CHECK(set.edges[0].kind == EdgeKind::real);
        CHECK(set.edges[0].probability() == Rational(1));
        CHECK(set.edges[1].pair == PairKey{0, 2});
        CHECK(set.edges[1].kind == EdgeKind::real);
        CHECK(set.edges[1].delta.is_zero());
        CHECK(set.edges[2].pair == PairKey{1, 2});
        CHECK(set.edges[2].kind == EdgeKind::virtual_link);
        CHECK(set.edges[2].probability() == Rational(1, 4));
    }

    SUBCASE("page 1 has no virtual edges: its zero pair is asserted nowhere") {
        CandidateEdgeSet set =
            inject_virtual_links(env.ontology, env.pages[0], corpus, VirtualConfig{});
        for (const CandidateEdge& e : set.edges) CHECK(e.kind == EdgeKind::real);
    }
}

TEST_CASE("fully annotated scope needs no virtual links") {
    OntologyGraph g = OntologyGraph::make({"a", "b", "c"}, {{"r1", 0, 1}, {"r2", 1, 2}});
    std::vector<PageSubgraph> pages;
    pages.push_back(PageSubgraph::make("p1", {"r1", "r2"}, {}, g));
    auto corpus = asserted_pairs(pages);
    CandidateEdgeSet set = inject_virtual_links(g, pages[0], corpus, VirtualConfig{});
    CHECK(set.size() == 2);
    for (const CandidateEdge& e : set.edges) CHECK(e.kind == EdgeKind::real);
}

TEST_CASE("a bridging virtual link raises the structural length") {
    Environment env = two_component_environment();
    auto corpus = asserted_pairs(env.pages);
    CandidateEdgeSet before = page_candidates(env.ontology, env.pages[1]);
    CandidateEdgeSet after =
        inject_virtual_links(env.ontology, env.pages[1], corpus, VirtualConfig{});
    CHECK(max_structural_length(before, false) == 2);
    CHECK(max_structural_length(after, false) == 5);

    int virtual_edges = 0;
    for (const CandidateEdge& e : after.edges)
        if (e.kind == EdgeKind::virtual_link) ++virtual_edges;
    CHECK(virtual_edges == 1);
}

TEST_CASE("virtual weight modes") {
    Environment env = travel_virtual_environment();
    auto corpus = asserted_pairs(env.pages);

    VirtualConfig per_relation;
    per_relation.delta_mode = VirtualDeltaMode::half_over_page_relations;
    CandidateEdgeSet set =
        inject_virtual_links(env.ontology, env.pages[1], corpus, per_relation);
    // page 2 holds two real relations: delta = 0.5/2, T = 0.25/2
    CHECK(set.edges[2].kind == EdgeKind::virtual_link);
    CHECK(set.edges[2].delta == Rational(1, 4));
    CHECK(set.edges[2].probability() == Rational(1, 8));
}

TEST_CASE("node fraction") {
    Environment env = two_component_environment();
    CHECK(node_fraction(env.pages[1], env.ontology) == Rational(1));   // touches all six
    CHECK(node_fraction(env.pages[0], env.ontology) == Rational(2, 3));  // four of six

    PageSubgraph isolated = PageSubgraph::make("px", {}, {4}, env.ontology);
    CHECK(node_fraction(isolated, env.ontology) == Rational(1, 6));

    // five concepts {0,1,2,3,5} of six: relations on 0-1, 2-3 plus isolated 5
    PageSubgraph five = PageSubgraph::make("pz", {"r01", "r11"}, {5}, env.ontology);
    CHECK(five.concept_set() == std::vector<ConceptId>{0, 1, 2, 3, 5});
    CHECK(node_fraction(five, env.ontology) == Rational(5, 6));
}

TEST_CASE("edge fraction") {
    Environment env = two_component_environment();
    CHECK(edge_fraction(env.pages[1], env.ontology) == Rational(6, 7));
    CHECK(edge_fraction(env.pages[0], env.ontology) == Rational(4, 7));

    PageSubgraph empty = PageSubgraph::make("px", {}, {0}, env.ontology);
    CHECK(edge_fraction(empty, env.ontology) == Rational());

    // page covering every ontology pair scores 1
    std::vector<std::string> all_first;
    for (const RelationEdge& r : env.ontology.relations()) {
        if (r.id[2] % 2 == 1) all_first.push_back(r.id);  // r01, r03, ... one per pair
    }
    PageSubgraph full = PageSubgraph::make("py", all_first, {}, env.ontology);
    CHECK(edge_fraction(full, env.ontology) == Rational(1));
}

TEST_CASE("edge fraction over a fourteen-pair ontology") {
    // 6 concepts, 14 of the 15 pairs, one relation each
    std::vector<RelationEdge> relations;
    int next = 0;
    for (ConceptId i = 0; i < 6; ++i) {
        for (ConceptId j = i + 1; j < 6; ++j) {
            if (i == 4 && j == 5) continue;
            char id[8];
            std::snprintf(id, sizeof(id), "e%02d", next++);
            relations.push_back({id, i, j});
        }
    }
    OntologyGraph g = OntologyGraph::make({"c0", "c1", "c2", "c3", "c4", "c5"},
                                          std::move(relations));
    REQUIRE(g.pair_count() == 14);
    PageSubgraph page = PageSubgraph::make("p", {"e00", "e01", "e02", "e03", "e04"}, {}, g);
    CHECK(edge_fraction(page, g) == Rational(5, 14));
}

TEST_CASE("virtual page score variants and the combined identity") {
    Environment env = two_component_environment();
    auto corpus = asserted_pairs(env.pages);
    for (const PageSubgraph& page : env.pages) {
        ScoredPage nodes =
            virtual_page_score(env.ontology, page, corpus, VirtualConfig{}, Method::nodes);
        ScoredPage edges =
            virtual_page_score(env.ontology, page, corpus, VirtualConfig{}, Method::edges);
        ScoredPage combined =
            virtual_page_score(env.ontology, page, corpus, VirtualConfig{}, Method::combined);

        Rational base = nodes.score - nodes.bonus_nodes;
        CHECK(edges.score - edges.bonus_edges == base);
        CHECK(combined.score == base + combined.bonus_nodes + combined.bonus_edges);
        CHECK(combined.score == nodes.score + edges.score - base);
        CHECK(nodes.bonus_edges == Rational());
        CHECK(edges.bonus_nodes == Rational());
    }
    CHECK_THROWS_AS(virtual_page_score(env.ontology, env.pages[0], corpus, VirtualConfig{},
                                       Method::old_method),
                    std::invalid_argument);
}

TEST_CASE("reference virtual bases") {
    Environment env = travel_virtual_environment();
    auto corpus = asserted_pairs(env.pages);
    ScoredPage p1 =
        virtual_page_score(env.ontology, env.pages[0], corpus, VirtualConfig{}, Method::nodes);
    ScoredPage p2 =
        virtual_page_score(env.ontology, env.pages[1], corpus, VirtualConfig{}, Method::nodes);
    CHECK(p1.score - p1.bonus_nodes == Rational(13, 6));
    CHECK(p2.score - p2.bonus_nodes == Rational(25, 12));
    CHECK(p1.score - p1.bonus_nodes > p2.score - p2.bonus_nodes);
}

TEST_CASE("relation-free single-concept page still scores under combined") {
    OntologyGraph g = OntologyGraph::make({"a", "b", "c", "d"}, {{"r1", 0, 1}});
    std::vector<PageSubgraph> pages;
    pages.push_back(PageSubgraph::make("p1", {}, {2}, g));
    auto corpus = asserted_pairs(pages);
    ScoredPage sp = virtual_page_score(g, pages[0], corpus, VirtualConfig{}, Method::combined);
    CHECK(sp.score == Rational(1, 4));
    CHECK(sp.chosen_length == 0);
    CHECK(sp.probability == Rational());
}

TEST_CASE("virtual weight is strictly weaker than any real annotation") {
    for (int eta = 1; eta <= 5; ++eta) {
        Rational constant_half = Rational(1, 2) / Rational(eta);
        Rational weakest_real = Rational(1) / Rational(eta);
        CHECK(constant_half < weakest_real);
        for (int relations = 1; relations <= 6; ++relations) {
            Rational per_page = Rational(1, 2 * relations) / Rational(eta);
            CHECK(per_page < weakest_real);
        }
    }
}

TEST_CASE("zero-score elimination over constructed pages") {
    Environment env = travel_virtual_environment();
    auto corpus = asserted_pairs(env.pages);
    std::vector<PageSubgraph> probes;
    probes.push_back(PageSubgraph::make("x1", {}, {0}, env.ontology));
    probes.push_back(PageSubgraph::make("x2", {}, {0, 1, 2}, env.ontology));
    probes.push_back(PageSubgraph::make("x3", {"r3"}, {}, env.ontology));
    for (const PageSubgraph& page : probes) {
        CHECK(virtual_page_score(env.ontology, page, corpus, VirtualConfig{}, Method::nodes)
                  .score.is_positive());
        CHECK(virtual_page_score(env.ontology, page, corpus, VirtualConfig{}, Method::combined)
                  .score.is_positive());
    }
}
