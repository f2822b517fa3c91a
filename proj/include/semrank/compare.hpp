#ifndef SEMRANK_COMPARE_HPP
#define SEMRANK_COMPARE_HPP

#include <span>
#include <string>
#include <vector>

#include "semrank/backlink_ranker.hpp"
#include "semrank/environment.hpp"
#include "semrank/virtual_ranker.hpp"

namespace semrank {

// One method's column of the comparison table. A method that fails (cap,
// non-convergence) keeps its column with the error recorded instead of
// aborting the other columns.
struct MethodColumn {
    Method method = Method::old_method;
    bool ok = false;
    std::string error;
    RankReport report;
};

struct ComparisonReport {
    std::vector<MethodColumn> columns;  // old, nodes, edges, combined, eigen

    // pairwise stats over columns that ranked successfully (indexed like columns)
    std::vector<std::vector<double>> kendall;
    std::vector<std::vector<bool>> top1_agree;
    std::vector<std::vector<bool>> top2_agree;
};

// Kendall tau-a between two strict orderings of the same id set
// (inversion count via merge sort). n < 2 compares equal (tau = 1).
double kendall_tau(std::span<const std::string> order_a, std::span<const std::string> order_b);

ComparisonReport compare_methods(const Environment& env, const VirtualConfig& virtual_config,
                                 BacklinkMode backlink_mode, double tolerance);

}  // namespace semrank

#endif
