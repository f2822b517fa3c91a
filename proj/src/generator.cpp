#include "semrank/generator.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace semrank {

namespace {

// splitmix64: tiny, fully specified, identical stream on every platform
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

std::string padded(const char* prefix, int index, int width) {
    std::string digits = std::to_string(index);
    return std::string(prefix) +
           std::string(static_cast<size_t>(width) - std::min<size_t>(width, digits.size()), '0') +
           digits;
}

int digits_of(int n) { return static_cast<int>(std::to_string(n).size()); }

}  // namespace

Environment generate_environment(const GeneratorParams& params) {
    if (params.concept_count < 2) throw ValidationError("generator needs at least 2 concepts");
    if (!(params.ontology_pair_density > 0.0) || params.ontology_pair_density > 1.0)
        throw ValidationError("ontology_pair_density must be in (0, 1]");
    if (params.max_multiplicity < 1) throw ValidationError("max_multiplicity must be >= 1");
    if (params.page_count < 1) throw ValidationError("page_count must be >= 1");
    if (params.page_relation_rate < 0.0 || params.page_relation_rate > 1.0)
        throw ValidationError("page_relation_rate must be in [0, 1]");

    SplitMix64 rng(params.seed);

    std::vector<std::string> labels;
    labels.reserve(params.concept_count);
    for (int c = 0; c < params.concept_count; ++c) {
        labels.push_back(padded("c", c, digits_of(params.concept_count - 1)));
    }

    // pass 1: pick pairs and multiplicities so the id width is known up front
    struct PlannedPair {
        ConceptId a, b;
        int eta;
    };
    std::vector<PlannedPair> planned;
    int total_relations = 0;
    for (ConceptId i = 0; i < params.concept_count; ++i) {
        for (ConceptId j = i + 1; j < params.concept_count; ++j) {
            if (rng.next_unit() >= params.ontology_pair_density) continue;
            int eta = 1 + static_cast<int>(rng.next_below(params.max_multiplicity));
            planned.push_back({i, j, eta});
            total_relations += eta;
        }
    }

    std::vector<RelationEdge> relations;
    relations.reserve(total_relations);
    int id_width = digits_of(std::max(total_relations - 1, 0));
    int next_id = 0;
    for (const PlannedPair& pp : planned) {
        for (int k = 0; k < pp.eta; ++k) {
            relations.push_back({padded("r", next_id++, id_width), pp.a, pp.b});
        }
    }

    Environment env;
    env.ontology = OntologyGraph::make(std::move(labels), std::move(relations));

    int page_width = digits_of(params.page_count);
    for (int p = 1; p <= params.page_count; ++p) {
        std::vector<std::string> picked;
        for (const RelationEdge& r : env.ontology.relations()) {
            if (rng.next_unit() < params.page_relation_rate) picked.push_back(r.id);
        }
        env.pages.push_back(PageSubgraph::make(padded("p", p, page_width), std::move(picked), {},
                                               env.ontology));
    }

    std::vector<Query::Association> assocs;
    for (ConceptId c = 0; c < params.concept_count; ++c) {
        assocs.push_back({padded("t", c, digits_of(params.concept_count - 1)), c});
    }
    env.query = Query::make(std::move(assocs), env.ontology);
    return env;
}

}  // namespace semrank
