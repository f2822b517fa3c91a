#include "semrank/backlink_ranker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace semrank {

namespace {

void validate_counts(const std::vector<std::vector<long>>& counts) {
    size_t n = counts.size();
    if (n < 1) throw std::invalid_argument("empty count matrix");
    for (const auto& row : counts) {
        if (row.size() != n) throw std::invalid_argument("count matrix is not square");
        for (long v : row) {
            if (v < 0) throw std::invalid_argument("negative back-link count");
        }
    }
}

std::string render_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

BacklinkMatrix BacklinkMatrix::from_counts(const std::vector<std::vector<long>>& counts,
                                           BacklinkMode mode) {
    validate_counts(counts);
    const int n = static_cast<int>(counts.size());
    std::vector<Rational> entries(static_cast<size_t>(n) * n);

    if (mode == BacklinkMode::reciprocal_shared) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (counts[i][j] != counts[j][i])
                    throw std::invalid_argument("reciprocal mode needs symmetric counts");
                if (i == j || counts[i][j] == 0) continue;
                entries[i * n + j] = Rational(1, counts[i][j]);
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            long column_sum = 0;
            for (int i = 0; i < n; ++i) {
                if (i != j) column_sum += counts[i][j];
            }
            if (column_sum == 0) continue;
            for (int i = 0; i < n; ++i) {
                if (i == j || counts[i][j] == 0) continue;
                entries[i * n + j] = Rational(counts[i][j], column_sum);
            }
        }
    }
    return BacklinkMatrix(n, std::move(entries), mode);
}

BacklinkMatrix BacklinkMatrix::from_entries(int order, std::vector<Rational> entries,
                                            BacklinkMode mode) {
    if (order < 1 || entries.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("entry vector does not match matrix order");
    for (int i = 0; i < order; ++i) {
        if (!entries[i * order + i].is_zero())
            throw std::invalid_argument("back-link matrix must have a zero diagonal");
        for (int j = 0; j < order; ++j) {
            if (entries[i * order + j].is_negative())
                throw std::invalid_argument("back-link matrix entries must be non-negative");
        }
    }
    if (mode == BacklinkMode::reciprocal_shared) {
        for (int i = 0; i < order; ++i) {
            for (int j = i + 1; j < order; ++j) {
                if (!(entries[i * order + j] == entries[j * order + i]))
                    throw std::invalid_argument("reciprocal mode matrix must be symmetric");
            }
        }
    } else {
        for (int j = 0; j < order; ++j) {
            Rational sum;
            for (int i = 0; i < order; ++i) sum += entries[i * order + j];
            if (!sum.is_zero() && !(sum == Rational(1)))
                throw std::invalid_argument("normalized mode columns must sum to 1");
        }
    }
    return BacklinkMatrix(order, std::move(entries), mode);
}

bool BacklinkMatrix::all_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

Eigen::MatrixXd BacklinkMatrix::to_dense() const {
    Eigen::MatrixXd m(order_, order_);
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j) m(i, j) = at(i, j).to_double();
    }
    return m;
}

int shared_relation_count(const PageSubgraph& a, const PageSubgraph& b) {
    const auto& ra = a.relation_ids();
    const auto& rb = b.relation_ids();
    int shared = 0;
    size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        if (ra[i] < rb[j]) {
            ++i;
        } else if (rb[j] < ra[i]) {
            ++j;
        } else {
            ++shared;
            ++i;
            ++j;
        }
    }
    return shared;
}

BacklinkMatrix build_matrix(std::span<const PageSubgraph> pages, BacklinkMode mode) {
    if (pages.size() < 2) throw std::invalid_argument("back-link matrix needs at least 2 pages");
    const int n = static_cast<int>(pages.size());
    std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int s = shared_relation_count(pages[i], pages[j]);
            counts[i][j] = s;
            counts[j][i] = s;
        }
    }
    return BacklinkMatrix::from_counts(counts, mode);
}

EigenResult power_iteration(const BacklinkMatrix& matrix, double tolerance, int max_iterations) {
    if (matrix.all_zero()) throw ConvergenceError("back-link matrix is zero");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const int n = matrix.order();
    const Eigen::MatrixXd h = matrix.to_dense();
    const double residual_target = std::min(tolerance, 1e-6);

    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = static_cast<double>(i + 1) / n;

    double lambda = 0.0;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        Eigen::VectorXd w = h * v;
        double scale = w.cwiseAbs().maxCoeff();
        if (scale == 0.0) throw ConvergenceError("iteration vector collapsed to zero");
        lambda = v.dot(w) / v.dot(v);
        Eigen::VectorXd next = w / scale;
        double change = (next - v).cwiseAbs().maxCoeff();
        v = next;
        if (change >= tolerance) continue;

        // candidate result: the residual bound must hold for the vector as
        // returned, i.e. after the last-entry rescale
        EigenResult result;
        result.eigenvalue = lambda;
        result.iterations = iter;
        Eigen::VectorXd scaled = v;
        double last = scaled(n - 1);
        if (std::abs(last) < 1e-12) {
            result.used_max_norm_fallback = true;
            int arg = 0;
            scaled.cwiseAbs().maxCoeff(&arg);
            scaled /= scaled(arg);
        } else {
            scaled /= last;
        }
        result.residual = (h * scaled - lambda * scaled).cwiseAbs().maxCoeff();
        if (result.residual >= residual_target) continue;
        result.vec.assign(scaled.data(), scaled.data() + n);
        return result;
    }
    throw ConvergenceError("power iteration did not converge after " +
                           std::to_string(max_iterations) +
                           " iterations (oscillating or tied spectrum)");
}

RankReport eigen_rank(std::span<const PageSubgraph> pages, BacklinkMode mode, double tolerance) {
    BacklinkMatrix h = build_matrix(pages, mode);
    EigenResult eig = power_iteration(h, tolerance);

    // reference listings quote 5 decimals; ties are grouped at that precision
    auto quantized = [&](int i) { return std::llround(eig.vec[i] * 1e5); };

    std::vector<int> order(pages.size());
    for (size_t i = 0; i < pages.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        long long qa = quantized(a), qb = quantized(b);
        if (qa != qb) return qa > qb;
        return pages[a].id() < pages[b].id();
    });

    RankReport report;
    report.method = Method::eigenvector;
    report.eigenvalue = eig.eigenvalue;
    report.iterations = eig.iterations;
    report.residual = eig.residual;
    report.used_max_norm_fallback = eig.used_max_norm_fallback;
    for (int idx : order) {
        RankEntry e;
        e.page_id = pages[idx].id();
        e.score_value = eig.vec[idx];
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.5f", eig.vec[idx]);
        e.score_display = buf;
        e.score_exact = render_double(eig.vec[idx]);
        report.entries.push_back(std::move(e));
    }
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i + 1;
        while (j < order.size() && quantized(order[j]) == quantized(order[i])) ++j;
        if (j - i >= 2) {
            std::vector<std::string> group;
            for (size_t k = i; k < j; ++k) group.push_back(pages[order[k]].id());
            report.tie_groups.push_back(std::move(group));
        }
        i = j;
    }
    return report;
}

}  // namespace semrank
