#include "doctest.h"

#include <cmath>

#include "semrank/golden.hpp"

using namespace semrank;

TEST_CASE("shared relation counts") {
    OntologyGraph g = OntologyGraph::make(
        {"a", "b"}, {{"r1", 0, 1}, {"r2", 0, 1}, {"r3", 0, 1}, {"r4", 0, 1}, {"r5", 0, 1}});
    PageSubgraph all = PageSubgraph::make("pa", {"r1", "r2", "r3", "r4"}, {}, g);
    PageSubgraph same = PageSubgraph::make("pb", {"r1", "r2", "r3", "r4"}, {}, g);
    PageSubgraph disjoint = PageSubgraph::make("pc", {"r5"}, {}, g);
    PageSubgraph overlap = PageSubgraph::make("pd", {"r3", "r4", "r5"}, {}, g);

    CHECK(shared_relation_count(all, same) == 4);
    CHECK(shared_relation_count(all, disjoint) == 0);
    CHECK(shared_relation_count(all, overlap) == 2);
    // a relation nobody else annotates contributes no back-link
    CHECK(shared_relation_count(disjoint, same) == 0);
}

TEST_CASE("reciprocal matrix entries are 1 over the shared count") {
    BacklinkMatrix h = BacklinkMatrix::from_counts(
        {
            {0, 1, 0, 0, 2},
            {1, 0, 3, 0, 0},
            {0, 3, 0, 0, 0},
            {0, 0, 0, 0, 0},
            {2, 0, 0, 0, 0},
        },
        BacklinkMode::reciprocal_shared);
    CHECK(h.at(0, 1) == Rational(1));
    CHECK(h.at(1, 2) == Rational(1, 3));
    CHECK(h.at(0, 4) == Rational(1, 2));
    CHECK(h.at(4, 0) == Rational(1, 2));
    CHECK(h.at(3, 3).is_zero());

    CHECK_THROWS_AS(BacklinkMatrix::from_counts({{0, 1}, {2, 0}}, BacklinkMode::reciprocal_shared),
                    std::invalid_argument);
}

TEST_CASE("column normalization and its scale invariance") {
    std::vector<std::vector<long>> counts = {
        {0, 1, 0},
        {2, 0, 1},
        {2, 3, 0},
    };
    BacklinkMatrix h = BacklinkMatrix::from_counts(counts, BacklinkMode::column_normalized);
    CHECK(h.at(1, 0) == Rational(1, 2));
    CHECK(h.at(2, 0) == Rational(1, 2));
    CHECK(h.at(0, 1) == Rational(1, 4));
    CHECK(h.at(2, 1) == Rational(3, 4));
    CHECK(h.at(1, 2) == Rational(1));

    for (auto& row : counts)
        for (long& v : row) v *= 7;
    BacklinkMatrix scaled = BacklinkMatrix::from_counts(counts, BacklinkMode::column_normalized);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(h.at(i, j) == scaled.at(i, j));
}

TEST_CASE("build_matrix over pages sharing nothing is the zero matrix") {
    OntologyGraph g = OntologyGraph::make({"a", "b"}, {{"r1", 0, 1}, {"r2", 0, 1}});
    std::vector<PageSubgraph> pages;
    pages.push_back(PageSubgraph::make("p1", {"r1"}, {}, g));
    pages.push_back(PageSubgraph::make("p2", {"r2"}, {}, g));
    BacklinkMatrix h = build_matrix(pages, BacklinkMode::reciprocal_shared);
    CHECK(h.all_zero());
    CHECK_THROWS_AS(power_iteration(h), ConvergenceError);
    CHECK_THROWS_AS(eigen_rank(pages, BacklinkMode::reciprocal_shared, 1e-10), ConvergenceError);
}

TEST_CASE("from_entries validates mode invariants") {
    const Rational z, o(1);
    CHECK_THROWS_AS(BacklinkMatrix::from_entries(2, {o, o, o, z}, BacklinkMode::reciprocal_shared),
                    std::invalid_argument);  // nonzero diagonal
    CHECK_THROWS_AS(
        BacklinkMatrix::from_entries(2, {z, o, Rational(1, 2), z}, BacklinkMode::reciprocal_shared),
        std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(
        BacklinkMatrix::from_entries(2, {z, Rational(1, 2), o, z},
                                     BacklinkMode::column_normalized),
        std::invalid_argument);  // column sums 1/2
    CHECK_NOTHROW(four_page_web_matrix());
}

TEST_CASE("four-page web: column structure and unit eigenvalue") {
    BacklinkMatrix h = four_page_web_matrix();
    CHECK(h.at(0, 1) == Rational(1, 2));
    CHECK(h.at(3, 1) == Rational(1, 2));
    CHECK(h.at(3, 0) == Rational(1));
    EigenResult eig = power_iteration(h, 1e-10);
    CHECK(std::fabs(eig.eigenvalue - 1.0) < 1e-6);
    CHECK(eig.residual < 1e-6);
}

TEST_CASE("power iteration reproduces the reference eigen pairs") {
    Environment env = backlink_environment(1);
    BacklinkMatrix h = build_matrix(env.pages, BacklinkMode::reciprocal_shared);
    EigenResult eig = power_iteration(h, 1e-10);
    CHECK(std::fabs(eig.eigenvalue - 2.48113) < 1e-4);
    const double expected[] = {1.43173, 0.727415, 1.11926, 1.20564, 1.0};
    REQUIRE(eig.vec.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(eig.vec[i] - expected[i]) < 1e-4);
    CHECK(eig.vec[4] == doctest::Approx(1.0));
    CHECK(eig.residual < 1e-6);
    CHECK_FALSE(eig.used_max_norm_fallback);
}

TEST_CASE("tied plus-minus spectrum surfaces as non-convergence") {
    BacklinkMatrix h = BacklinkMatrix::from_entries(
        2, {Rational(), Rational(1), Rational(1), Rational()}, BacklinkMode::reciprocal_shared);
    CHECK_THROWS_AS(power_iteration(h, 1e-10, 2000), ConvergenceError);
}

TEST_CASE("eigen rank orders pages and records 5-decimal ties") {
    SUBCASE("strict order of example 1") {
        Environment env = backlink_environment(1);
        RankReport r = eigen_rank(env.pages, BacklinkMode::reciprocal_shared, 1e-10);
        REQUIRE(r.entries.size() == 5);
        const char* expected[] = {"p1", "p4", "p3", "p5", "p2"};
        for (int i = 0; i < 5; ++i) CHECK(r.entries[i].page_id == expected[i]);
        CHECK(r.tie_groups.empty());
        CHECK(r.method == Method::eigenvector);
    }
    SUBCASE("example 2 ties p1 and p4 at listing precision") {
        Environment env = backlink_environment(2);
        RankReport r = eigen_rank(env.pages, BacklinkMode::reciprocal_shared, 1e-10);
        CHECK(std::fabs(r.eigenvalue - 3.04681) < 1e-4);
        const char* expected[] = {"p2", "p3", "p1", "p4", "p5"};
        for (int i = 0; i < 5; ++i) CHECK(r.entries[i].page_id == expected[i]);
        REQUIRE(r.tie_groups.size() == 1);
        CHECK(r.tie_groups[0] == std::vector<std::string>{"p1", "p4"});
    }
    SUBCASE("example 3 order") {
        Environment env = backlink_environment(3);
        RankReport r = eigen_rank(env.pages, BacklinkMode::reciprocal_shared, 1e-10);
        CHECK(std::fabs(r.eigenvalue - 1.12237) < 1e-4);
        const char* expected[] = {"p1", "p5", "p4", "p3", "p2"};
        for (int i = 0; i < 5; ++i) CHECK(r.entries[i].page_id == expected[i]);
    }
}

TEST_CASE("zero last entry falls back to max-entry normalization") {
    // triangle of mutual links plus a page sharing nothing: its eigenvector
    // entry is exactly zero, so last-entry scaling is impossible
    BacklinkMatrix h = BacklinkMatrix::from_counts(
        {
            {0, 1, 1, 0},
            {1, 0, 1, 0},
            {1, 1, 0, 0},
            {0, 0, 0, 0},
        },
        BacklinkMode::reciprocal_shared);
    EigenResult eig = power_iteration(h, 1e-10);
    CHECK(eig.used_max_norm_fallback);
    CHECK(eig.eigenvalue == doctest::Approx(2.0));
    CHECK(eig.vec[0] == doctest::Approx(1.0));
    CHECK(eig.vec[1] == doctest::Approx(1.0));
    CHECK(eig.vec[2] == doctest::Approx(1.0));
    CHECK(eig.vec[3] == doctest::Approx(0.0));
    CHECK(eig.residual < 1e-6);
}

TEST_CASE("residual bound holds for the returned vector even at loose tolerance") {
    // the last-entry rescale inflates residuals by 1/|v_last| (about 4x for
    // example 2); the bound applies to the vector as returned
    Environment env = backlink_environment(2);
    BacklinkMatrix h = build_matrix(env.pages, BacklinkMode::reciprocal_shared);
    EigenResult eig = power_iteration(h, 1e-4);
    CHECK(eig.residual < 1e-6);
}

TEST_CASE("reciprocal matrices stay symmetric with non-negative dominant eigenvalue") {
    for (int which = 1; which <= 3; ++which) {
        Environment env = backlink_environment(which);
        BacklinkMatrix h = build_matrix(env.pages, BacklinkMode::reciprocal_shared);
        for (int i = 0; i < h.order(); ++i)
            for (int j = 0; j < h.order(); ++j) CHECK(h.at(i, j) == h.at(j, i));
        EigenResult eig = power_iteration(h, 1e-10);
        CHECK(eig.eigenvalue >= 0.0);
        CHECK(eig.residual < 1e-6);
    }
}
