#include "doctest.h"

#include <algorithm>
#include <random>

#include "semrank/compare.hpp"
#include "semrank/golden.hpp"

using namespace semrank;

namespace {

// quadratic concordant-minus-discordant oracle
double kendall_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    size_t n = a.size();
    if (n < 2) return 1.0;
    auto pos = [](const std::vector<std::string>& v, const std::string& id) {
        return std::find(v.begin(), v.end(), id) - v.begin();
    };
    long long concordant = 0, discordant = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            long pa = pos(b, a[i]);
            long pb = pos(b, a[j]);
            (pa < pb ? concordant : discordant)++;
        }
    }
    return static_cast<double>(concordant - discordant) /
           (static_cast<double>(n) * (n - 1) / 2.0);
}

}  // namespace

TEST_CASE("kendall tau endpoints") {
    std::vector<std::string> order = {"a", "b", "c", "d"};
    std::vector<std::string> reversed = {"d", "c", "b", "a"};
    CHECK(kendall_tau(order, order) == doctest::Approx(1.0));
    CHECK(kendall_tau(order, reversed) == doctest::Approx(-1.0));
    std::vector<std::string> single = {"a"};
    CHECK(kendall_tau(single, single) == doctest::Approx(1.0));
    std::vector<std::string> other = {"a", "b", "x", "d"};
    CHECK_THROWS_AS(kendall_tau(order, other), std::invalid_argument);
}

TEST_CASE("kendall tau matches the quadratic oracle on random permutations") {
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::string> a, b;
        for (int i = 0; i < n; ++i) a.push_back("p" + std::to_string(i));
        b = a;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(kendall_tau(a, b) == doctest::Approx(kendall_oracle(a, b)));
    }
}

TEST_CASE("comparison report runs all five methods") {
    Environment env = backlink_environment(1);
    ComparisonReport report =
        compare_methods(env, VirtualConfig{}, BacklinkMode::reciprocal_shared, 1e-10);
    REQUIRE(report.columns.size() == 5);
    CHECK(report.columns[0].method == Method::old_method);
    CHECK(report.columns[4].method == Method::eigenvector);

    std::vector<std::string> all_ids;
    for (const PageSubgraph& p : env.pages) all_ids.push_back(p.id());
    for (const MethodColumn& col : report.columns) {
        REQUIRE(col.ok);
        std::vector<std::string> ids;
        for (const RankEntry& e : col.report.entries) ids.push_back(e.page_id);
        std::sort(ids.begin(), ids.end());
        CHECK(ids == all_ids);  // each column is a permutation of the page set
    }
    CHECK(report.kendall[0][0] == doctest::Approx(1.0));
    CHECK(report.top1_agree[2][2]);
}

TEST_CASE("eigen order inside the comparison matches the reference listing") {
    Environment env = backlink_environment(1);
    ComparisonReport report =
        compare_methods(env, VirtualConfig{}, BacklinkMode::reciprocal_shared, 1e-10);
    const MethodColumn& eigen = report.columns[4];
    REQUIRE(eigen.ok);
    const char* expected[] = {"p1", "p4", "p3", "p5", "p2"};
    for (int i = 0; i < 5; ++i) CHECK(eigen.report.entries[i].page_id == expected[i]);
}

TEST_CASE("a failing method becomes a column error, not an abort") {
    // two pages sharing nothing: the eigen column fails, the rest rank
    OntologyGraph g = OntologyGraph::make({"a", "b"}, {{"r1", 0, 1}, {"r2", 0, 1}});
    Environment env;
    env.ontology = std::move(g);
    env.pages.push_back(PageSubgraph::make("p1", {"r1"}, {}, env.ontology));
    env.pages.push_back(PageSubgraph::make("p2", {"r2"}, {}, env.ontology));
    env.query = Query::make({{"x", 0}, {"y", 1}}, env.ontology);

    ComparisonReport report =
        compare_methods(env, VirtualConfig{}, BacklinkMode::reciprocal_shared, 1e-10);
    CHECK(report.columns[0].ok);
    CHECK(report.columns[3].ok);
    CHECK_FALSE(report.columns[4].ok);
    CHECK(!report.columns[4].error.empty());
}

TEST_CASE("single-page environment: rational columns trivially agree") {
    OntologyGraph g = OntologyGraph::make({"a", "b"}, {{"r1", 0, 1}});
    Environment env;
    env.ontology = std::move(g);
    env.pages.push_back(PageSubgraph::make("p1", {"r1"}, {}, env.ontology));
    env.query = Query::make({{"x", 0}, {"y", 1}}, env.ontology);

    ComparisonReport report =
        compare_methods(env, VirtualConfig{}, BacklinkMode::reciprocal_shared, 1e-10);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(report.columns[i].ok);
        REQUIRE(report.columns[i].report.entries.size() == 1);
        CHECK(report.columns[i].report.entries[0].page_id == "p1");
    }
    CHECK(report.kendall[0][3] == doctest::Approx(1.0));
    CHECK_FALSE(report.columns[4].ok);  // eigen needs two pages
}

TEST_CASE("comparison requires a query") {
    Environment env = backlink_environment(1);
    env.query.reset();
    CHECK_THROWS_AS(compare_methods(env, VirtualConfig{}, BacklinkMode::reciprocal_shared, 1e-10),
                    ValidationError);
}
