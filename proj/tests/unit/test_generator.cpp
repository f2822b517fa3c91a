#include "doctest.h"

#include "semrank/generator.hpp"

using namespace semrank;

TEST_CASE("same seed, same bytes") {
    GeneratorParams params;
    params.seed = 1;
    params.concept_count = 6;
    params.ontology_pair_density = 0.9;
    params.max_multiplicity = 5;
    params.page_count = 10;
    params.page_relation_rate = 0.35;

    std::string a = serialize_environment(generate_environment(params));
    std::string b = serialize_environment(generate_environment(params));
    CHECK(a == b);

    params.seed = 2;
    CHECK(serialize_environment(generate_environment(params)) != a);
}

TEST_CASE("generated environments reload to the same bytes") {
    GeneratorParams params;
    params.seed = 99;
    params.concept_count = 5;
    params.ontology_pair_density = 0.7;
    params.max_multiplicity = 3;
    params.page_count = 4;
    params.page_relation_rate = 0.5;

    Environment env = generate_environment(params);
    std::string serialized = serialize_environment(env);
    Environment reloaded = parse_environment(serialized);
    CHECK(serialize_environment(reloaded) == serialized);
    CHECK(reloaded.pages.size() == 4);
    CHECK(reloaded.query.has_value());
    CHECK(reloaded.query->concept_set().size() == 5);
}

TEST_CASE("density one covers every pair, multiplicities stay in range") {
    GeneratorParams params;
    params.seed = 3;
    params.concept_count = 5;
    params.ontology_pair_density = 1.0;
    params.max_multiplicity = 4;
    params.page_count = 1;
    params.page_relation_rate = 1.0;

    Environment env = generate_environment(params);
    CHECK(env.ontology.pair_count() == 10);
    for (const auto& [pair, eta] : env.ontology.pair_multiplicities()) {
        CHECK(eta >= 1);
        CHECK(eta <= 4);
    }
    // rate 1 copies the whole ontology onto the page
    CHECK(env.pages[0].relation_count() ==
          static_cast<int>(env.ontology.relations().size()));
}

TEST_CASE("relation rate zero produces relation-free pages") {
    GeneratorParams params;
    params.seed = 5;
    params.concept_count = 4;
    params.ontology_pair_density = 0.8;
    params.max_multiplicity = 2;
    params.page_count = 3;
    params.page_relation_rate = 0.0;

    Environment env = generate_environment(params);
    for (const PageSubgraph& p : env.pages) {
        CHECK(p.relation_count() == 0);
        CHECK(p.concept_set().empty());
    }
}

TEST_CASE("parameter validation") {
    GeneratorParams params;
    params.concept_count = 1;
    CHECK_THROWS_AS(generate_environment(params), ValidationError);
    params.concept_count = 3;
    params.ontology_pair_density = 0.0;
    CHECK_THROWS_AS(generate_environment(params), ValidationError);
    params.ontology_pair_density = 0.5;
    params.max_multiplicity = 0;
    CHECK_THROWS_AS(generate_environment(params), ValidationError);
    params.max_multiplicity = 1;
    params.page_count = 0;
    CHECK_THROWS_AS(generate_environment(params), ValidationError);
    params.page_count = 1;
    params.page_relation_rate = 1.5;
    CHECK_THROWS_AS(generate_environment(params), ValidationError);
}

TEST_CASE("seed 1 at high density produces the fourteen-pair shape") {
    GeneratorParams params;
    params.seed = 1;
    params.concept_count = 6;
    params.ontology_pair_density = 14.0 / 15.0;
    params.max_multiplicity = 5;
    params.page_count = 10;
    params.page_relation_rate = 0.35;

    Environment env = generate_environment(params);
    CHECK(env.ontology.pair_count() == 14);
    CHECK(env.pages.size() == 10);

    // counts survive a save/reload round trip
    Environment reloaded = parse_environment(serialize_environment(env));
    CHECK(reloaded.ontology.pair_count() == 14);
    CHECK(reloaded.ontology.relations().size() == env.ontology.relations().size());
    for (const auto& [pair, eta] : reloaded.ontology.pair_multiplicities()) CHECK(eta <= 5);
}

TEST_CASE("page ids sort numerically via zero padding") {
    GeneratorParams params;
    params.seed = 11;
    params.concept_count = 3;
    params.ontology_pair_density = 1.0;
    params.max_multiplicity = 1;
    params.page_count = 12;
    params.page_relation_rate = 0.3;

    Environment env = generate_environment(params);
    REQUIRE(env.pages.size() == 12);
    CHECK(env.pages.front().id() == "p01");
    CHECK(env.pages.back().id() == "p12");
}
