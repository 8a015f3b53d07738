#include "kpath/report.hpp"

#include <json.hpp>

#include "kpath/errors.hpp"

namespace kpath {

using ordered_json = nlohmann::ordered_json;

const char* variant_name(Variant v) {
    return v == Variant::Erw ? "erw" : "werw";
}

Variant variant_from_name(const std::string& name) {
    if (name == "erw") return Variant::Erw;
    if (name == "werw") return Variant::Werw;
    throw ConfigError("unknown variant: " + name);
}

std::string write_run_summary_json(const CentralityVector& vec, const Graph& g,
                                   bool include_elapsed) {
    ordered_json j;
    j["variant"] = variant_name(vec.config.variant);
    j["kappa"] = vec.config.kappa;
    j["rho"] = vec.rho;
    j["beta"] = vec.beta;
    j["seed"] = vec.config.seed;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    j["graph_fingerprint"] = vec.graph_fingerprint;
    if (include_elapsed) j["elapsed_seconds"] = vec.elapsed_seconds;
    return j.dump(2) + "\n";
}

std::string write_robustness_json(const RobustnessReport& report) {
    ordered_json j;
    j["runs"] = report.run_seeds.size();
    j["run_seeds"] = report.run_seeds;
    j["taus"] = report.taus;

    ordered_json pairs = ordered_json::array();
    for (const auto& pc : report.pairs) {
        ordered_json p;
        p["run_a"] = pc.run_a;
        p["run_b"] = pc.run_b;
        ordered_json jac;
        for (std::size_t t = 0; t < report.taus.size(); ++t) {
            jac[std::to_string(report.taus[t])] = pc.jaccard[t];
        }
        p["jaccard"] = jac;
        p["pearson"] = pc.pearson;
        p["pearson_degenerate"] = pc.pearson_degenerate;
        p["l2"] = pc.l2;
        p["avg_l2"] = pc.avg_l2;
        p["spearman"] = pc.spearman;
        p["spearman_degenerate"] = pc.spearman_degenerate;
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);

    ordered_json means;
    ordered_json jac;
    for (std::size_t t = 0; t < report.taus.size(); ++t) {
        jac[std::to_string(report.taus[t])] = report.mean_jaccard[t];
    }
    means["jaccard"] = jac;
    means["pearson"] = report.mean_pearson;
    means["l2"] = report.mean_l2;
    means["avg_l2"] = report.mean_avg_l2;
    means["spearman"] = report.mean_spearman;
    j["means"] = std::move(means);
    return j.dump(2) + "\n";
}

std::string write_oracle_json(const OracleComparison& cmp, const Graph& g) {
    ordered_json j;
    j["kappa"] = cmp.oracle.kappa;
    j["rho"] = cmp.rho;
    j["mc_runs"] = cmp.mc_runs;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();

    ordered_json edges = ordered_json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        ordered_json row;
        row["src"] = g.label(u);
        row["dst"] = g.label(v);
        row["centrality"] = cmp.oracle.centrality[e];
        row["predicted_mean_omega"] = cmp.predicted_mean[e];
        row["measured_mean_omega"] = cmp.measured_mean[e];
        row["z_score"] = cmp.z_scores[e];
        edges.push_back(std::move(row));
    }
    j["edges"] = std::move(edges);

    ordered_json per_source = ordered_json::array();
    for (NodeId s = 0; s < g.node_count(); ++s) {
        ordered_json row;
        row["source"] = g.label(s);
        row["edge_probabilities"] = cmp.oracle.per_source_edge_prob[s];
        row["leaf_mass"] = cmp.oracle.per_source_leaf_mass[s];
        per_source.push_back(std::move(row));
    }
    j["per_source"] = std::move(per_source);
    return j.dump(2) + "\n";
}

std::string write_bench_json(const BenchReport& report) {
    ordered_json j;
    ordered_json cells = ordered_json::array();
    for (const auto& c : report.cells) {
        ordered_json row;
        row["edges"] = c.edge_count;
        row["nodes"] = c.node_count;
        row["kappa"] = c.kappa;
        row["seconds_per_run"] = c.seconds_per_run;
        row["runs_timed"] = c.runs_timed;
        cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);

    ordered_json ratios = ordered_json::array();
    for (const auto& r : report.ratios) {
        ordered_json row;
        row["axis"] = r.axis;
        if (r.axis == "edges") {
            row["kappa"] = r.kappa_from;
            row["edges_from"] = r.edges_from;
            row["edges_to"] = r.edges_to;
        } else {
            row["edges"] = r.edge_count;
            row["kappa_from"] = r.kappa_from;
            row["kappa_to"] = r.kappa_to;
        }
        row["ratio"] = r.ratio;
        ratios.push_back(std::move(row));
    }
    j["ratios"] = std::move(ratios);
    return j.dump(2) + "\n";
}

std::string write_stats_json(const StatsReport& report) {
    ordered_json j;
    ordered_json hist;
    hist["bin_edges"] = report.hist.bin_edges;
    hist["probabilities"] = report.hist.probabilities;
    j["histogram"] = std::move(hist);

    ordered_json ranks = ordered_json::array();
    for (const auto& p : report.ranks) {
        ranks.push_back(ordered_json::array({p.rank, p.value}));
    }
    j["rank_plot"] = std::move(ranks);
    j["rank_slope"] = report.rank_slope;
    if (report.has_cross_kappa) j["cross_kappa_spearman"] = report.cross_kappa_spearman;
    return j.dump(2) + "\n";
}

} // namespace kpath
