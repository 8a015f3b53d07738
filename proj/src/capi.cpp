#include "kpath.h"

#include <cstring>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kpath/errors.hpp"
#include "kpath/experiments.hpp"
#include "kpath/graph.hpp"
#include "kpath/ingest.hpp"
#include "kpath/report.hpp"
#include "kpath/walk.hpp"

struct kp_graph {
    kpath::Graph graph;
};

struct kp_result {
    kpath::CentralityVector vec;
    std::size_t edge_count;
};

namespace {

thread_local std::string g_last_error;

kp_status fail(kp_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

// Maps core exceptions onto status codes; config and size-guard problems
// are KP_ERR_CONFIG, parse problems KP_ERR_PARSE.
template <typename Fn>
kp_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return KP_OK;
    } catch (const kpath::ParseError& e) {
        g_last_error = e.what();
        return KP_ERR_PARSE;
    } catch (const kpath::SizeLimitError& e) {
        g_last_error = e.what();
        return KP_ERR_CONFIG;
    } catch (const kpath::ConfigError& e) {
        g_last_error = e.what();
        return KP_ERR_CONFIG;
    } catch (const kpath::DegenerateError& e) {
        g_last_error = e.what();
        return KP_ERR_RUNTIME;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KP_ERR_RUNTIME;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kpath::WalkConfig to_walk_config(const kp_config* cfg) {
    kpath::WalkConfig wc;
    wc.variant = cfg->variant == KP_VARIANT_ERW ? kpath::Variant::Erw : kpath::Variant::Werw;
    if (cfg->kappa < 1) throw kpath::ConfigError("kappa must be >= 1");
    wc.kappa = static_cast<std::uint32_t>(cfg->kappa);
    if (cfg->rho >= 0) wc.rho = static_cast<std::uint64_t>(cfg->rho);
    if (cfg->beta > 0.0) wc.beta = cfg->beta;
    wc.seed = cfg->seed;
    return wc;
}

// Align two centrality CSVs on their unordered (src, dst) label pairs.
std::pair<std::vector<double>, std::vector<double>> align_csvs(const std::string& a,
                                                               const std::string& b) {
    auto recs_a = kpath::read_centrality_csv(a);
    auto recs_b = kpath::read_centrality_csv(b);
    auto key = [](const kpath::CentralityRecord& r) {
        return r.src < r.dst ? std::make_pair(r.src, r.dst) : std::make_pair(r.dst, r.src);
    };
    std::map<std::pair<std::string, std::string>, double> by_edge;
    for (const auto& r : recs_b) by_edge[key(r)] = r.omega;
    if (by_edge.size() != recs_a.size() || recs_a.size() != recs_b.size()) {
        throw kpath::ConfigError("mismatched edge sets");
    }
    std::vector<double> x, y;
    x.reserve(recs_a.size());
    for (const auto& r : recs_a) {
        auto it = by_edge.find(key(r));
        if (it == by_edge.end()) throw kpath::ConfigError("mismatched edge sets");
        x.push_back(r.omega);
        y.push_back(it->second);
    }
    return {std::move(x), std::move(y)};
}

} // namespace

extern "C" {

const char* kp_last_error(void) { return g_last_error.c_str(); }

void kp_string_free(char* s) { delete[] s; }

kp_status kp_graph_from_file(const char* path, kp_graph** out) {
    if (!path || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] { *out = new kp_graph{kpath::parse_edge_list_file(path)}; });
}

kp_status kp_graph_from_string(const char* text, kp_graph** out) {
    if (!text || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] { *out = new kp_graph{kpath::parse_edge_list(text)}; });
}

kp_status kp_graph_random(uint64_t nodes, uint64_t edges, uint64_t seed, kp_graph** out) {
    if (!out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] { *out = new kp_graph{kpath::random_graph(nodes, edges, seed)}; });
}

void kp_graph_free(kp_graph* g) { delete g; }

uint64_t kp_graph_node_count(const kp_graph* g) { return g ? g->graph.node_count() : 0; }

uint64_t kp_graph_edge_count(const kp_graph* g) { return g ? g->graph.edge_count() : 0; }

void kp_config_init(kp_config* cfg) {
    cfg->variant = KP_VARIANT_WERW;
    cfg->kappa = 20;
    cfg->rho = -1;
    cfg->beta = -1.0;
    cfg->seed = 0;
}

kp_status kp_run(const kp_graph* g, const kp_config* cfg, kp_result** out) {
    if (!g || !cfg || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] {
        auto wc = to_walk_config(cfg);
        *out = new kp_result{kpath::run_kpath(g->graph, wc), g->graph.edge_count()};
    });
}

void kp_result_free(kp_result* r) { delete r; }

double kp_result_elapsed_seconds(const kp_result* r) { return r ? r->vec.elapsed_seconds : 0.0; }

uint64_t kp_result_count(const kp_result* r, uint64_t edge) {
    return (r && edge < r->vec.counts.size()) ? r->vec.counts[edge] : 0;
}

double kp_result_omega(const kp_result* r, uint64_t edge) {
    return (r && edge < r->vec.counts.size()) ? r->vec.omega(edge, r->edge_count) : 0.0;
}

kp_status kp_result_to_csv(const kp_result* r, const kp_graph* g, char** out) {
    if (!r || !g || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] { *out = copy_string(kpath::write_centrality_csv(r->vec, g->graph)); });
}

kp_status kp_result_summary_json(const kp_result* r, const kp_graph* g, int include_elapsed,
                                 char** out) {
    if (!r || !g || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] {
        *out = copy_string(kpath::write_run_summary_json(r->vec, g->graph, include_elapsed != 0));
    });
}

kp_status kp_robustness_json(const kp_graph* g, const kp_config* cfg, int runs,
                             const double* taus, int n_taus, int jobs, const uint64_t* seeds,
                             char** out) {
    if (!g || !cfg || !out || (!taus && n_taus > 0)) return fail(KP_ERR_CONFIG, "null argument");
    if (runs < 2) return fail(KP_ERR_CONFIG, "robustness needs at least 2 runs");
    return guarded([&] {
        auto wc = to_walk_config(cfg);
        std::vector<double> tau_list(taus, taus + n_taus);
        std::vector<uint64_t> seed_list;
        if (seeds) seed_list.assign(seeds, seeds + runs);
        auto report = kpath::run_robustness(g->graph, wc, static_cast<std::size_t>(runs),
                                            tau_list, jobs < 1 ? 1 : static_cast<std::size_t>(jobs),
                                            seed_list);
        *out = copy_string(kpath::write_robustness_json(report));
    });
}

kp_status kp_oracle_json(const kp_graph* g, const kp_config* cfg, uint64_t mc_runs, int jobs,
                         char** out) {
    if (!g || !cfg || !out) return fail(KP_ERR_CONFIG, "null argument");
    return guarded([&] {
        auto wc = to_walk_config(cfg);
        auto cmp = kpath::run_oracle_comparison(g->graph, wc, mc_runs,
                                                jobs < 1 ? 1 : static_cast<std::size_t>(jobs));
        *out = copy_string(kpath::write_oracle_json(cmp, g->graph));
    });
}

kp_status kp_bench_json(const uint64_t* edge_sizes, int n_sizes, const int32_t* kappas,
                        int n_kappas, uint64_t seed, int variant, char** out) {
    if (!edge_sizes || !kappas || !out) return fail(KP_ERR_CONFIG, "null argument");
    if (n_sizes < 1) return fail(KP_ERR_CONFIG, "empty size list");
    if (n_kappas < 1) return fail(KP_ERR_CONFIG, "empty kappa list");
    return guarded([&] {
        std::vector<std::size_t> sizes(edge_sizes, edge_sizes + n_sizes);
        std::vector<std::uint32_t> ks;
        for (int i = 0; i < n_kappas; ++i) {
            if (kappas[i] < 1) throw kpath::ConfigError("kappa must be >= 1");
            ks.push_back(static_cast<std::uint32_t>(kappas[i]));
        }
        auto v = variant == KP_VARIANT_ERW ? kpath::Variant::Erw : kpath::Variant::Werw;
        auto report = kpath::run_bench(sizes, ks, seed, v);
        *out = copy_string(kpath::write_bench_json(report));
    });
}

kp_status kp_stats_json(const char* csv_text, const char* other_csv_or_null, int bins,
                        int log_bins, char** out) {
    if (!csv_text || !out) return fail(KP_ERR_CONFIG, "null argument");
    if (bins < 1) return fail(KP_ERR_CONFIG, "bins must be >= 1");
    return guarded([&] {
        kpath::StatsReport report;
        if (other_csv_or_null) {
            auto [x, y] = align_csvs(csv_text, other_csv_or_null);
            report = kpath::run_stats(x, static_cast<std::size_t>(bins), log_bins != 0, &y);
        } else {
            auto recs = kpath::read_centrality_csv(csv_text);
            std::vector<double> x;
            x.reserve(recs.size());
            for (const auto& r : recs) x.push_back(r.omega);
            report = kpath::run_stats(x, static_cast<std::size_t>(bins), log_bins != 0);
        }
        *out = copy_string(kpath::write_stats_json(report));
    });
}

} // extern "C"
