#ifndef SEMRANK_GENERATOR_HPP
#define SEMRANK_GENERATOR_HPP

#include <cstdint>

#include "semrank/environment.hpp"

namespace semrank {

struct GeneratorParams {
    std::uint64_t seed = 1;
    int concept_count = 6;
    double ontology_pair_density = 0.5;   // (0, 1]
    int max_multiplicity = 1;             // eta drawn uniformly from 1..max
    int page_count = 10;
    double page_relation_rate = 0.5;      // [0, 1]; 0 keeps pages relation-free
};

// Deterministic controlled environment: same params, same bytes. Every
// included pair receives 1..max_multiplicity uniquely-id'd relations;
// every page samples each ontology relation independently; the emitted
// query associates one synthetic term per concept.
Environment generate_environment(const GeneratorParams& params);

}  // namespace semrank

#endif
