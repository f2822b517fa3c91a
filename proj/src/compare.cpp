#include "semrank/compare.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semrank {

namespace {

long long count_inversions(std::vector<int>& a, std::vector<int>& buf, size_t lo, size_t hi) {
    if (hi - lo < 2) return 0;
    size_t mid = lo + (hi - lo) / 2;
    long long inv = count_inversions(a, buf, lo, mid) + count_inversions(a, buf, mid, hi);
    size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            buf[k++] = a[i++];
        } else {
            inv += static_cast<long long>(mid - i);
            buf[k++] = a[j++];
        }
    }
    while (i < mid) buf[k++] = a[i++];
    while (j < hi) buf[k++] = a[j++];
    std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
    return inv;
}

std::vector<std::string> order_ids(const RankReport& report) {
    std::vector<std::string> ids;
    ids.reserve(report.entries.size());
    for (const RankEntry& e : report.entries) ids.push_back(e.page_id);
    return ids;
}

}  // namespace

double kendall_tau(std::span<const std::string> order_a, std::span<const std::string> order_b) {
    const size_t n = order_a.size();
    if (order_b.size() != n) throw std::invalid_argument("kendall_tau over mismatched orderings");
    if (n < 2) return 1.0;

    std::map<std::string, int> position;
    for (size_t i = 0; i < n; ++i) {
        if (!position.emplace(order_a[i], static_cast<int>(i)).second)
            throw std::invalid_argument("kendall_tau ordering has duplicate id");
    }
    std::vector<int> sequence;
    sequence.reserve(n);
    for (const std::string& id : order_b) {
        auto it = position.find(id);
        if (it == position.end())
            throw std::invalid_argument("kendall_tau orderings rank different id sets");
        sequence.push_back(it->second);
    }

    std::vector<int> buf(sequence.size());
    long long discordant = count_inversions(sequence, buf, 0, sequence.size());
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    return 1.0 - 2.0 * static_cast<double>(discordant) / static_cast<double>(total);
}

ComparisonReport compare_methods(const Environment& env, const VirtualConfig& virtual_config,
                                 BacklinkMode backlink_mode, double tolerance) {
    if (!env.query) throw ValidationError("comparison requires an environment with a query");

    ComparisonReport report;
    std::set<PairKey> corpus = asserted_pairs(env.pages);

    auto run_rational = [&](Method method) {
        MethodColumn col;
        col.method = method;
        try {
            std::vector<ScoredPage> scored;
            scored.reserve(env.pages.size());
            for (const PageSubgraph& page : env.pages) {
                if (method == Method::old_method) {
                    scored.push_back(baseline_page_score(env.ontology, page, *env.query));
                } else {
                    scored.push_back(
                        virtual_page_score(env.ontology, page, corpus, virtual_config, method));
                }
            }
            col.report = rank(scored);
            col.ok = true;
        } catch (const std::exception& e) {
            col.error = e.what();
        }
        return col;
    };

    report.columns.push_back(run_rational(Method::old_method));
    report.columns.push_back(run_rational(Method::nodes));
    report.columns.push_back(run_rational(Method::edges));
    report.columns.push_back(run_rational(Method::combined));

    MethodColumn eigen_col;
    eigen_col.method = Method::eigenvector;
    try {
        eigen_col.report = eigen_rank(env.pages, backlink_mode, tolerance);
        eigen_col.ok = true;
    } catch (const std::exception& e) {
        eigen_col.error = e.what();
    }
    report.columns.push_back(std::move(eigen_col));

    const size_t m = report.columns.size();
    report.kendall.assign(m, std::vector<double>(m, 0.0));
    report.top1_agree.assign(m, std::vector<bool>(m, false));
    report.top2_agree.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (!report.columns[i].ok || !report.columns[j].ok) continue;
            auto a = order_ids(report.columns[i].report);
            auto b = order_ids(report.columns[j].report);
            report.kendall[i][j] = kendall_tau(a, b);
            bool top1 = !a.empty() && a[0] == b[0];
            report.top1_agree[i][j] = top1;
            report.top2_agree[i][j] = top1 && (a.size() < 2 || a[1] == b[1]);
        }
    }
    return report;
}

}  // namespace semrank
