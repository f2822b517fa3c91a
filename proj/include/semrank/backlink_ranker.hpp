#ifndef SEMRANK_BACKLINK_RANKER_HPP
#define SEMRANK_BACKLINK_RANKER_HPP

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <vector>

#include "semrank/relation_ranker.hpp"

namespace semrank {

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

enum class BacklinkMode { reciprocal_shared, column_normalized };

// Inter-page back-link matrix H. Entries are exact rationals; only the
// eigen solve downstream runs in floating point.
class BacklinkMatrix {
public:
    // From a non-negative count matrix: reciprocal_shared takes 1/count
    // (requires symmetric counts, matching undirected back-links);
    // column_normalized divides each column by its sum and accepts
    // directed counts too. Zero diagonal enforced.
    static BacklinkMatrix from_counts(const std::vector<std::vector<long>>& counts,
                                      BacklinkMode mode);

    // Direct entries (row-major), validated against the mode's invariants.
    static BacklinkMatrix from_entries(int order, std::vector<Rational> entries,
                                       BacklinkMode mode);

    int order() const { return order_; }
    BacklinkMode mode() const { return mode_; }
    const Rational& at(int row, int col) const { return entries_[row * order_ + col]; }

    bool all_zero() const;
    Eigen::MatrixXd to_dense() const;

private:
    BacklinkMatrix(int order, std::vector<Rational> entries, BacklinkMode mode)
        : order_(order), entries_(std::move(entries)), mode_(mode) {}

    int order_ = 0;
    std::vector<Rational> entries_;  // row-major
    BacklinkMode mode_ = BacklinkMode::reciprocal_shared;
};

// Number of uniquely identified relations two pages share.
int shared_relation_count(const PageSubgraph& a, const PageSubgraph& b);

BacklinkMatrix build_matrix(std::span<const PageSubgraph> pages, BacklinkMode mode);

struct EigenResult {
    double eigenvalue = 0.0;
    std::vector<double> vec;  // scaled so the last entry is 1 when possible
    int iterations = 0;
    double residual = 0.0;               // max-norm of H*v - lambda*v
    bool used_max_norm_fallback = false;  // last entry was ~0 pre-scaling
};

// Dominant eigenpair by power iteration with max-norm rescaling, starting
// from the deterministic vector (1, 2, ..., n)/n. Converged results satisfy
// residual < min(tolerance, 1e-6); a tied +-lambda spectrum (oscillation)
// surfaces as ConvergenceError.
EigenResult power_iteration(const BacklinkMatrix& matrix, double tolerance = 1e-10,
                            int max_iterations = 100000);

// Pages ordered by descending eigenvector entry; entries are compared at
// 5-decimal precision so reference-listing ties resolve by ascending page id.
RankReport eigen_rank(std::span<const PageSubgraph> pages, BacklinkMode mode,
                      double tolerance = 1e-10);

}  // namespace semrank

#endif
