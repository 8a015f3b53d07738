#include <doctest.h>

#include <json.hpp>

#include "kpath/experiments.hpp"
#include "kpath/ingest.hpp"
#include "kpath/report.hpp"

using namespace kpath;
using nlohmann::json;

TEST_CASE("run summary serializes deterministically") {
    Graph g = parse_edge_list("a b\nb c\n");
    WalkConfig cfg;
    cfg.variant = Variant::Erw;
    cfg.kappa = 2;
    cfg.seed = 5;
    auto vec = run_kpath(g, cfg);

    std::string a = write_run_summary_json(vec, g, false);
    std::string b = write_run_summary_json(run_kpath(g, cfg), g, false);
    CHECK(a == b);

    auto j = json::parse(a);
    CHECK(j["variant"] == "erw");
    CHECK(j["kappa"] == 2);
    CHECK(j["rho"] == 1);
    CHECK(j["nodes"] == 3);
    CHECK(j["edges"] == 2);
    CHECK(!j.contains("elapsed_seconds"));
    CHECK(json::parse(write_run_summary_json(vec, g, true)).contains("elapsed_seconds"));
}

TEST_CASE("robustness report JSON shape") {
    Graph g = random_graph(40, 120, 3);
    WalkConfig cfg;
    cfg.kappa = 5;
    cfg.seed = 9;
    auto report = run_robustness(g, cfg, 3, {0.01, 0.05, 0.10}, 2);
    auto j = json::parse(write_robustness_json(report));

    CHECK(j["runs"] == 3);
    CHECK(j["run_seeds"] == json({9, 10, 11}));
    CHECK(j["pairs"].size() == 3);
    for (const auto& p : j["pairs"]) {
        CHECK(p.contains("jaccard"));
        CHECK(p.contains("pearson"));
        CHECK(p.contains("l2"));
        CHECK(p.contains("avg_l2"));
        CHECK(p.contains("spearman"));
    }
    CHECK(j["means"]["jaccard"].size() == 3);
}

TEST_CASE("identical explicit seeds give the degenerate-identical convention") {
    Graph g = random_graph(20, 50, 4);
    WalkConfig cfg;
    cfg.kappa = 4;
    auto report = run_robustness(g, cfg, 2, {0.05}, 1, {77, 77});
    CHECK(report.pairs.size() == 1);
    CHECK(report.pairs[0].pearson == doctest::Approx(1.0));
    CHECK(report.pairs[0].pearson_degenerate);
    CHECK(report.pairs[0].l2 == doctest::Approx(0.0));
    CHECK(report.pairs[0].jaccard[0] == doctest::Approx(1.0));

    auto j = json::parse(write_robustness_json(report));
    CHECK(j["pairs"][0]["pearson_degenerate"] == true);
}

TEST_CASE("oracle JSON carries exact and measured values") {
    Graph g = parse_edge_list("a b\n");
    WalkConfig cfg;
    cfg.variant = Variant::Erw;
    cfg.kappa = 1;
    cfg.rho = 5;
    cfg.beta = 1.0;
    auto cmp = run_oracle_comparison(g, cfg, 100);
    auto j = json::parse(write_oracle_json(cmp, g));
    CHECK(j["edges"][0]["centrality"] == doctest::Approx(2.0));
    CHECK(j["edges"][0]["predicted_mean_omega"] == doctest::Approx(6.0));
    CHECK(j["edges"][0]["measured_mean_omega"] == doctest::Approx(6.0));
    CHECK(j["per_source"].size() == 2);
}

TEST_CASE("stats JSON shape with cross-kappa spearman") {
    std::vector<double> x = {0.9, 0.5, 0.1, 0.3};
    std::vector<double> y = {0.8, 0.6, 0.2, 0.4};
    auto report = run_stats(x, 4, false, &y);
    auto j = json::parse(write_stats_json(report));
    CHECK(j["histogram"]["probabilities"].size() == 4);
    CHECK(j["rank_plot"].size() == 4);
    CHECK(j["cross_kappa_spearman"] == doctest::Approx(1.0));
}

TEST_CASE("bench report includes doubling ratios") {
    auto report = run_bench({400, 800}, {2, 4}, 1, Variant::Erw, 0.002);
    auto j = json::parse(write_bench_json(report));
    CHECK(j["cells"].size() == 4);
    int edge_ratios = 0, kappa_ratios = 0;
    for (const auto& r : j["ratios"]) {
        if (r["axis"] == "edges") ++edge_ratios;
        if (r["axis"] == "kappa") ++kappa_ratios;
        CHECK(r["ratio"].get<double>() > 0.0);
    }
    CHECK(edge_ratios == 2);
    CHECK(kappa_ratios == 2);
}
