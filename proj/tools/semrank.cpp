#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semrank/compare.hpp"
#include "semrank/generator.hpp"
#include "semrank/golden.hpp"

namespace {

using namespace semrank;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitGoldenFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

struct CommonFlags {
    std::string virtual_mode = "constant-half";
    std::string backlink_mode = "reciprocal";
    double tolerance = 1e-10;
    std::string format = "table";
    std::vector<std::string> assocs;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_format) {
    cmd->add_option("--virtual-mode", flags.virtual_mode, "virtual edge weight rule")
        ->check(CLI::IsMember({"constant-half", "half-over-page"}));
    cmd->add_option("--backlink-mode", flags.backlink_mode, "back-link matrix construction")
        ->check(CLI::IsMember({"reciprocal", "normalized"}));
    cmd->add_option("--tolerance", flags.tolerance, "power iteration tolerance");
    if (with_format) {
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"table", "csv", "json", "json-like"}));
    }
    cmd->add_option("--assoc", flags.assocs,
                    "term=conceptIndex query association (repeatable, overrides file query)");
}

VirtualConfig virtual_config_of(const CommonFlags& flags) {
    VirtualConfig config;
    config.delta_mode = flags.virtual_mode == "half-over-page"
                            ? VirtualDeltaMode::half_over_page_relations
                            : VirtualDeltaMode::constant_half;
    return config;
}

BacklinkMode backlink_mode_of(const CommonFlags& flags) {
    return flags.backlink_mode == "normalized" ? BacklinkMode::column_normalized
                                               : BacklinkMode::reciprocal_shared;
}

Query parse_assocs(const std::vector<std::string>& assocs, const OntologyGraph& ontology) {
    std::vector<Query::Association> list;
    for (const std::string& raw : assocs) {
        auto eq = raw.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ValidationError("--assoc expects term=conceptIndex, got \"" + raw + "\"");
        Query::Association a;
        a.term = raw.substr(0, eq);
        try {
            a.concept_id = std::stoi(raw.substr(eq + 1));
        } catch (const std::exception&) {
            throw ValidationError("--assoc concept index is not an integer in \"" + raw + "\"");
        }
        list.push_back(std::move(a));
    }
    return Query::make(std::move(list), ontology);
}

ordered_json entry_json(const RankEntry& e, bool eigen) {
    ordered_json j;
    j["page"] = e.page_id;
    j["score"] = e.score_value;
    j["score_display"] = e.score_display;
    j["score_exact"] = e.score_exact;
    if (!eigen) {
        j["length"] = e.chosen_length;
        j["probability"] = e.probability;
        j["bonus_nodes"] = e.bonus_nodes;
        j["bonus_edges"] = e.bonus_edges;
    }
    return j;
}

void print_rank_table(const RankReport& report) {
    bool eigen = report.method == Method::eigenvector;
    std::printf("%-5s %-10s %-12s %-4s %-10s %-10s %-10s\n", "rank", "page", "score", "l", "P",
                "nodes", "edges");
    int position = 1;
    for (const RankEntry& e : report.entries) {
        if (eigen) {
            std::printf("%-5d %-10s %-12s %-4s %-10s %-10s %-10s\n", position, e.page_id.c_str(),
                        e.score_display.c_str(), "-", "-", "-", "-");
        } else {
            std::printf("%-5d %-10s %-12s %-4d %-10s %-10s %-10s\n", position, e.page_id.c_str(),
                        e.score_display.c_str(), e.chosen_length,
                        fmt("%.5f", e.probability).c_str(), fmt("%.5f", e.bonus_nodes).c_str(),
                        fmt("%.5f", e.bonus_edges).c_str());
        }
        ++position;
    }
    for (const auto& group : report.tie_groups) {
        std::string ids;
        for (const std::string& id : group) ids += (ids.empty() ? "" : ", ") + id;
        std::printf("# tie: %s\n", ids.c_str());
    }
    if (eigen) {
        std::printf("# lambda = %.6f  iterations = %d  residual = %.2e%s\n", report.eigenvalue,
                    report.iterations, report.residual,
                    report.used_max_norm_fallback ? "  (max-entry normalization)" : "");
    }
}

void print_rank_csv(const RankReport& report) {
    std::printf("rank,page,score,score_exact,length,probability,bonus_nodes,bonus_edges\n");
    bool eigen = report.method == Method::eigenvector;
    int position = 1;
    for (const RankEntry& e : report.entries) {
        if (eigen) {
            std::printf("%d,%s,%.17g,%s,,,,\n", position, e.page_id.c_str(), e.score_value,
                        e.score_exact.c_str());
        } else {
            std::printf("%d,%s,%.17g,%s,%d,%.17g,%.17g,%.17g\n", position, e.page_id.c_str(),
                        e.score_value, e.score_exact.c_str(), e.chosen_length, e.probability,
                        e.bonus_nodes, e.bonus_edges);
        }
        ++position;
    }
}

void print_rank_json(const RankReport& report) {
    ordered_json doc;
    doc["method"] = std::string(method_name(report.method));
    ordered_json entries = ordered_json::array();
    bool eigen = report.method == Method::eigenvector;
    for (const RankEntry& e : report.entries) entries.push_back(entry_json(e, eigen));
    doc["entries"] = std::move(entries);
    doc["tie_groups"] = report.tie_groups;
    if (eigen) {
        doc["eigenvalue"] = report.eigenvalue;
        doc["iterations"] = report.iterations;
        doc["residual"] = report.residual;
    }
    std::printf("%s\n", doc.dump(2).c_str());
}

const char* column_title(Method m) {
    switch (m) {
        case Method::old_method: return "Old Method";
        case Method::nodes: return "New Method (Nodes)";
        case Method::edges: return "New Method (Edges)";
        case Method::combined: return "New Method (Combined)";
        case Method::eigenvector: return "Eigen-vector Method";
    }
    return "?";
}

void print_compare_table(const ComparisonReport& report) {
    constexpr int kWidth = 24;
    for (const MethodColumn& col : report.columns)
        std::printf("%-*s", kWidth, column_title(col.method));
    std::printf("\n");

    size_t rows = 0;
    for (const MethodColumn& col : report.columns)
        if (col.ok) rows = std::max(rows, col.report.entries.size());
    for (size_t r = 0; r < rows; ++r) {
        for (const MethodColumn& col : report.columns) {
            std::string cell;
            if (!col.ok) {
                cell = r == 0 ? "error: " + col.error : "";
                if (cell.size() > static_cast<size_t>(kWidth - 2)) cell.resize(kWidth - 2);
            } else if (r < col.report.entries.size()) {
                const RankEntry& e = col.report.entries[r];
                cell = "PS[" + e.page_id + "] = " + e.score_display;
            }
            std::printf("%-*s", kWidth, cell.c_str());
        }
        std::printf("\n");
    }

    std::printf("\n# pairwise kendall tau / top-1 / top-2 agreement\n");
    for (size_t i = 0; i < report.columns.size(); ++i) {
        for (size_t j = i + 1; j < report.columns.size(); ++j) {
            if (!report.columns[i].ok || !report.columns[j].ok) continue;
            std::printf("# %-8s vs %-8s  tau = %+.4f  top1 = %s  top2 = %s\n",
                        std::string(method_name(report.columns[i].method)).c_str(),
                        std::string(method_name(report.columns[j].method)).c_str(),
                        report.kendall[i][j], report.top1_agree[i][j] ? "yes" : "no",
                        report.top2_agree[i][j] ? "yes" : "no");
        }
    }
}

void print_compare_csv(const ComparisonReport& report) {
    std::printf("method,rank,page,score,score_exact\n");
    for (const MethodColumn& col : report.columns) {
        if (!col.ok) {
            std::printf("%s,error,\"%s\",,\n", std::string(method_name(col.method)).c_str(),
                        col.error.c_str());
            continue;
        }
        int position = 1;
        for (const RankEntry& e : col.report.entries) {
            std::printf("%s,%d,%s,%.17g,%s\n", std::string(method_name(col.method)).c_str(),
                        position++, e.page_id.c_str(), e.score_value, e.score_exact.c_str());
        }
    }
}

void print_compare_json(const ComparisonReport& report) {
    ordered_json doc;
    ordered_json columns = ordered_json::array();
    for (const MethodColumn& col : report.columns) {
        ordered_json jc;
        jc["method"] = std::string(method_name(col.method));
        jc["ok"] = col.ok;
        if (!col.ok) {
            jc["error"] = col.error;
        } else {
            ordered_json entries = ordered_json::array();
            bool eigen = col.method == Method::eigenvector;
            for (const RankEntry& e : col.report.entries) entries.push_back(entry_json(e, eigen));
            jc["entries"] = std::move(entries);
            jc["tie_groups"] = col.report.tie_groups;
        }
        columns.push_back(std::move(jc));
    }
    doc["columns"] = std::move(columns);
    doc["kendall_tau"] = report.kendall;
    std::printf("%s\n", doc.dump(2).c_str());
}

int run_gen(const GeneratorParams& params, const std::string& out_path) {
    Environment env = generate_environment(params);
    save_environment(env, out_path);
    std::printf("wrote %s: %d concepts, %d pairs, %zu relations, %zu pages\n", out_path.c_str(),
                env.ontology.concept_count(), env.ontology.pair_count(),
                env.ontology.relations().size(), env.pages.size());
    return kExitOk;
}

int run_rank(const std::string& env_path, const std::string& method_name_str,
             const CommonFlags& flags) {
    Environment env = load_environment(env_path);
    if (!flags.assocs.empty()) env.query = parse_assocs(flags.assocs, env.ontology);

    RankReport report;
    if (method_name_str == "eigen") {
        report = eigen_rank(env.pages, backlink_mode_of(flags), flags.tolerance);
    } else if (method_name_str == "old") {
        if (!env.query)
            throw ValidationError(
                "method old needs a query: none in the environment and no --assoc given");
        std::vector<ScoredPage> scored;
        for (const PageSubgraph& page : env.pages)
            scored.push_back(baseline_page_score(env.ontology, page, *env.query));
        report = rank(scored);
    } else {
        Method method = method_name_str == "nodes"   ? Method::nodes
                        : method_name_str == "edges" ? Method::edges
                                                     : Method::combined;
        auto corpus = asserted_pairs(env.pages);
        VirtualConfig config = virtual_config_of(flags);
        std::vector<ScoredPage> scored;
        for (const PageSubgraph& page : env.pages)
            scored.push_back(virtual_page_score(env.ontology, page, corpus, config, method));
        report = rank(scored);
    }

    if (flags.format == "csv") {
        print_rank_csv(report);
    } else if (flags.format == "json" || flags.format == "json-like") {
        print_rank_json(report);
    } else {
        print_rank_table(report);
    }
    return kExitOk;
}

int run_compare(const std::string& env_path, const CommonFlags& flags) {
    Environment env = load_environment(env_path);
    if (!flags.assocs.empty()) env.query = parse_assocs(flags.assocs, env.ontology);
    ComparisonReport report =
        compare_methods(env, virtual_config_of(flags), backlink_mode_of(flags), flags.tolerance);
    if (flags.format == "csv") {
        print_compare_csv(report);
    } else if (flags.format == "json" || flags.format == "json-like") {
        print_compare_json(report);
    } else {
        print_compare_table(report);
    }
    return kExitOk;
}

int run_verify_golden(bool perturb) {
    std::vector<GoldenCheck> checks = run_golden_checks(perturb);
    int failures = 0;
    for (const GoldenCheck& check : checks) {
        std::printf("%s %-26s %s\n", check.passed ? "PASS" : "FAIL", check.name.c_str(),
                    check.detail.c_str());
        if (!check.passed) ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures == 0 ? kExitOk : kExitGoldenFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic-association page ranking over controlled ontology environments"};
    app.require_subcommand(1);

    GeneratorParams gen_params;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a seeded environment file");
    gen->add_option("--seed", gen_params.seed, "PRNG seed");
    gen->add_option("--concepts", gen_params.concept_count, "ontology concept count");
    gen->add_option("--density", gen_params.ontology_pair_density, "pair inclusion probability");
    gen->add_option("--max-multiplicity", gen_params.max_multiplicity, "max relations per pair");
    gen->add_option("--pages", gen_params.page_count, "number of pages");
    gen->add_option("--relation-rate", gen_params.page_relation_rate,
                    "per-relation page annotation probability");
    gen->add_option("--out", gen_out, "output path")->required();

    std::string rank_env, rank_method;
    CommonFlags rank_flags;
    CLI::App* rank_cmd = app.add_subcommand("rank", "rank an environment's pages by one method");
    rank_cmd->add_option("environment", rank_env, "environment file")->required();
    rank_cmd->add_option("--method", rank_method, "ranking method")
        ->required()
        ->check(CLI::IsMember({"old", "nodes", "edges", "combined", "eigen"}));
    add_common_flags(rank_cmd, rank_flags, true);

    std::string compare_env;
    CommonFlags compare_flags;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "run all five methods and compare the orderings");
    compare_cmd->add_option("environment", compare_env, "environment file")->required();
    add_common_flags(compare_cmd, compare_flags, true);

    bool perturb = false;
    CLI::App* golden_cmd =
        app.add_subcommand("verify-golden", "check the embedded reference values");
    golden_cmd->add_flag("--perturb", perturb,
                         "corrupt one fixture to prove failures are reported (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (gen->parsed()) return run_gen(gen_params, gen_out);
        if (rank_cmd->parsed()) return run_rank(rank_env, rank_method, rank_flags);
        if (compare_cmd->parsed()) return run_compare(compare_env, compare_flags);
        if (golden_cmd->parsed()) return run_verify_golden(perturb);
    } catch (const CapExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConvergence;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitOk;
}
