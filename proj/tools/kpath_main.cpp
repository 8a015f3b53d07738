// kpath command line: compute | robustness | oracle | bench | stats.
// Talks to the library through the C API only. Exit codes: 0 ok,
// 2 parse error, 3 invalid config, 4 runtime failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpath.h"

namespace {

struct GraphDeleter {
    void operator()(kp_graph* g) const { kp_graph_free(g); }
};
struct ResultDeleter {
    void operator()(kp_result* r) const { kp_result_free(r); }
};
using GraphPtr = std::unique_ptr<kp_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<kp_result, ResultDeleter>;

int report_error(kp_status rc) {
    std::cerr << "error: " << kp_last_error() << "\n";
    return rc;
}

int write_output(const char* text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return KP_ERR_RUNTIME;
    }
    out << text;
    return 0;
}

std::string read_file_or_die(const std::string& path, int& rc) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        rc = KP_ERR_PARSE;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    rc = 0;
    return ss.str();
}

// Shared walk flags. Precedence: flag > environment > default.
struct WalkFlags {
    std::string variant = "werw";
    std::int32_t kappa = 20;
    std::int64_t rho = -1;    // -1: default |E| - 1
    double beta = -1.0;       // <= 0: default 1 / |E|
    std::uint64_t seed = 0;

    void add_to(CLI::App* cmd, bool with_variant = true) {
        if (with_variant) {
            cmd->add_option("--variant", variant, "erw or werw")
                ->envname("KPATH_VARIANT")
                ->check(CLI::IsMember({"erw", "werw"}));
        }
        cmd->add_option("--kappa", kappa, "walk length bound")->envname("KPATH_KAPPA");
        cmd->add_option("--rho", rho, "iterations (default |E|-1)")->envname("KPATH_RHO");
        cmd->add_option("--beta", beta, "traversal bonus (default 1/|E|)")->envname("KPATH_BETA");
        cmd->add_option("--seed", seed, "RNG seed")->envname("KPATH_SEED");
    }

    kp_config config() const {
        kp_config cfg;
        kp_config_init(&cfg);
        cfg.variant = variant == "erw" ? KP_VARIANT_ERW : KP_VARIANT_WERW;
        cfg.kappa = kappa;
        cfg.rho = rho;
        cfg.beta = beta;
        cfg.seed = seed;
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa-path edge centrality via bounded self-avoiding random walks"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "run the algorithm and write a centrality CSV");
    std::string in_path, out_path, summary_path;
    WalkFlags cf;
    compute->add_option("--input", in_path, "edge list file")->required();
    cf.add_to(compute);
    compute->add_option("--output", out_path, "CSV output path (stdout if omitted)");
    compute->add_option("--summary-output", summary_path,
                        "write the run summary JSON (without timing) to this file");

    // robustness
    auto* robust = app.add_subcommand("robustness", "repeated runs and pairwise comparison metrics");
    std::string r_in, r_out;
    WalkFlags rf;
    int r_runs = 4, r_jobs = 1;
    std::vector<double> r_taus;
    std::vector<std::uint64_t> r_seeds;
    robust->add_option("--input", r_in, "edge list file")->required();
    rf.add_to(robust);
    robust->add_option("--runs", r_runs, "number of independent runs");
    robust->add_option("--tau", r_taus, "tolerance threshold (repeatable)");
    robust->add_option("--jobs", r_jobs, "concurrent runs")->envname("KPATH_JOBS");
    robust->add_option("--run-seed", r_seeds, "explicit per-run seed (repeatable, overrides --seed)");
    robust->add_option("--output", r_out, "JSON output path (stdout if omitted)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact small-instance probabilities vs Monte Carlo");
    std::string o_in, o_out;
    WalkFlags of;
    std::uint64_t o_mc = 100000;
    int o_jobs = 1;
    oracle->add_option("--input", o_in, "edge list file")->required();
    of.add_to(oracle);
    oracle->add_option("--mc-runs", o_mc, "measurement runs");
    oracle->add_option("--jobs", o_jobs, "concurrent runs")->envname("KPATH_JOBS");
    oracle->add_option("--output", o_out, "JSON output path (stdout if omitted)");

    // bench
    auto* bench = app.add_subcommand("bench", "timing grid over synthetic graphs");
    std::string b_out, b_variant = "werw";
    std::vector<std::uint64_t> b_sizes;
    std::vector<std::int32_t> b_kappas;
    std::uint64_t b_seed = 0;
    bench->add_option("--edges", b_sizes, "edge count (repeatable)")->required();
    bench->add_option("--kappa", b_kappas, "kappa value (repeatable)")->required();
    bench->add_option("--variant", b_variant, "erw or werw")
        ->envname("KPATH_VARIANT")
        ->check(CLI::IsMember({"erw", "werw"}));
    bench->add_option("--seed", b_seed, "RNG seed")->envname("KPATH_SEED");
    bench->add_option("--output", b_out, "JSON output path (stdout if omitted)");

    // stats
    auto* stats = app.add_subcommand("stats", "distribution shape of a centrality CSV");
    std::string s_in, s_cmp, s_out;
    int s_bins = 20;
    bool s_log = false;
    stats->add_option("--input", s_in, "centrality CSV")->required();
    stats->add_option("--compare", s_cmp, "second CSV for cross-ranking Spearman");
    stats->add_option("--bins", s_bins, "histogram bins");
    stats->add_flag("--log-bins", s_log, "log-spaced bins");
    stats->add_option("--output", s_out, "JSON output path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        kp_graph* graw = nullptr;
        if (kp_status rc = kp_graph_from_file(in_path.c_str(), &graw); rc != KP_OK)
            return report_error(rc);
        GraphPtr g(graw);

        kp_config cfg = cf.config();
        kp_result* rraw = nullptr;
        if (kp_status rc = kp_run(g.get(), &cfg, &rraw); rc != KP_OK) return report_error(rc);
        ResultPtr r(rraw);

        char* csv = nullptr;
        if (kp_status rc = kp_result_to_csv(r.get(), g.get(), &csv); rc != KP_OK)
            return report_error(rc);
        int wrc = write_output(csv, out_path);
        kp_string_free(csv);
        if (wrc != 0) return wrc;

        if (!summary_path.empty()) {
            char* summary = nullptr;
            if (kp_status rc = kp_result_summary_json(r.get(), g.get(), 0, &summary); rc != KP_OK)
                return report_error(rc);
            wrc = write_output(summary, summary_path);
            kp_string_free(summary);
            if (wrc != 0) return wrc;
        }
        if (!out_path.empty()) {
            char* summary = nullptr;
            if (kp_status rc = kp_result_summary_json(r.get(), g.get(), 1, &summary); rc != KP_OK)
                return report_error(rc);
            std::cout << summary;
            kp_string_free(summary);
        }
        return 0;
    }

    if (robust->parsed()) {
        kp_graph* graw = nullptr;
        if (kp_status rc = kp_graph_from_file(r_in.c_str(), &graw); rc != KP_OK)
            return report_error(rc);
        GraphPtr g(graw);

        if (r_taus.empty()) r_taus = {0.01, 0.05, 0.10};
        if (!r_seeds.empty() && static_cast<int>(r_seeds.size()) != r_runs) {
            std::cerr << "error: --run-seed count must equal --runs\n";
            return KP_ERR_CONFIG;
        }
        kp_config cfg = rf.config();
        char* json = nullptr;
        kp_status rc = kp_robustness_json(g.get(), &cfg, r_runs, r_taus.data(),
                                          static_cast<int>(r_taus.size()), r_jobs,
                                          r_seeds.empty() ? nullptr : r_seeds.data(), &json);
        if (rc != KP_OK) return report_error(rc);
        int wrc = write_output(json, r_out);
        kp_string_free(json);
        return wrc;
    }

    if (oracle->parsed()) {
        kp_graph* graw = nullptr;
        if (kp_status rc = kp_graph_from_file(o_in.c_str(), &graw); rc != KP_OK)
            return report_error(rc);
        GraphPtr g(graw);

        kp_config cfg = of.config();
        char* json = nullptr;
        kp_status rc = kp_oracle_json(g.get(), &cfg, o_mc, o_jobs, &json);
        if (rc != KP_OK) return report_error(rc);
        int wrc = write_output(json, o_out);
        kp_string_free(json);
        return wrc;
    }

    if (bench->parsed()) {
        char* json = nullptr;
        kp_status rc = kp_bench_json(b_sizes.data(), static_cast<int>(b_sizes.size()),
                                     b_kappas.data(), static_cast<int>(b_kappas.size()), b_seed,
                                     b_variant == "erw" ? KP_VARIANT_ERW : KP_VARIANT_WERW, &json);
        if (rc != KP_OK) return report_error(rc);
        int wrc = write_output(json, b_out);
        kp_string_free(json);
        return wrc;
    }

    if (stats->parsed()) {
        int rc = 0;
        std::string csv = read_file_or_die(s_in, rc);
        if (rc != 0) return rc;
        std::string other;
        if (!s_cmp.empty()) {
            other = read_file_or_die(s_cmp, rc);
            if (rc != 0) return rc;
        }
        char* json = nullptr;
        kp_status src = kp_stats_json(csv.c_str(), s_cmp.empty() ? nullptr : other.c_str(),
                                      s_bins, s_log ? 1 : 0, &json);
        if (src != KP_OK) return report_error(src);
        int wrc = write_output(json, s_out);
        kp_string_free(json);
        return wrc;
    }

    return 0;
}
