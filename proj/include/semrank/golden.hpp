#ifndef SEMRANK_GOLDEN_HPP
#define SEMRANK_GOLDEN_HPP

#include <string>
#include <vector>

#include "semrank/backlink_ranker.hpp"
#include "semrank/environment.hpp"

namespace semrank {

// Embedded reference environments used by the golden verification suite
// and the tests. Construction goes through the same validated factories
// as file loading.

// Travel ontology (3 concepts, two parallel relations per pair) with the
// joint-probability demo pages: p1 annotates one relation on each of two
// pairs, p2 annotates both relations of a single pair.
Environment travel_joint_environment();

// Same ontology, the before/after-virtual-links page pair: p1 has one
// relation on the first pair and both on the second; p2 has both relations
// of the first pair plus an isolated third concept.
Environment travel_virtual_environment();

// Six-concept ontology with seven two-relation pairs; p1 spans a path plus
// chord over four concepts, p2 two separate triangles bridged only through
// the ontology.
Environment two_component_environment();

// Four-concept ontology, single-relation triangle pairs; two relation-free
// pages that differ only in one extra annotated concept.
Environment isolated_pages_environment();

// Five-page environments whose pairwise shared-relation counts reproduce
// the three reference back-link matrices (which = 1, 2, 3).
Environment backlink_environment(int which);

// The four-page one-directional web, entered directly (column-normalized).
BacklinkMatrix four_page_web_matrix();

struct GoldenCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs every embedded reference value check. `perturb` is a self-test hook
// that corrupts one fixture value so the harness can prove a failing check
// is reported.
std::vector<GoldenCheck> run_golden_checks(bool perturb = false);

}  // namespace semrank

#endif
