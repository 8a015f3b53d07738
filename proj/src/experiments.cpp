#include "kpath/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "kpath/errors.hpp"

namespace kpath {

namespace {

// Runs `total` independent walks over derived seeds, invoking `consume`
// (indexed, thread-safe by disjoint index) with each finished vector.
void parallel_runs(const Graph& g, const WalkConfig& base, std::size_t total,
                   std::size_t jobs, const std::vector<std::uint64_t>& seeds,
                   std::vector<CentralityVector>& out) {
    out.resize(total);
    jobs = std::max<std::size_t>(1, std::min(jobs, total));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= total) break;
            WalkConfig cfg = base;
            cfg.seed = seeds.empty() ? base.seed + i : seeds[i];
            out[i] = run_kpath(g, cfg);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
}

} // namespace

RobustnessReport run_robustness(const Graph& g, const WalkConfig& cfg, std::size_t runs,
                                const std::vector<double>& taus, std::size_t jobs,
                                const std::vector<std::uint64_t>& explicit_seeds) {
    if (runs < 2) throw ConfigError("robustness needs at least 2 runs");
    if (!explicit_seeds.empty() && explicit_seeds.size() != runs) {
        throw ConfigError("explicit seed count must match run count");
    }

    std::vector<CentralityVector> vectors;
    parallel_runs(g, cfg, runs, jobs, explicit_seeds, vectors);

    std::vector<std::vector<double>> omegas;
    std::vector<std::uint64_t> seeds;
    omegas.reserve(runs);
    for (std::size_t i = 0; i < runs; ++i) {
        omegas.push_back(vectors[i].omegas(g.edge_count()));
        seeds.push_back(vectors[i].config.seed);
    }
    return compare_runs(omegas, seeds, taus, g.edge_count());
}

OracleComparison run_oracle_comparison(const Graph& g, const WalkConfig& cfg,
                                       std::uint64_t mc_runs, std::size_t jobs) {
    if (mc_runs < 1) throw ConfigError("need at least 1 measurement run");

    OracleComparison out;
    auto variant = cfg.variant == Variant::Erw ? OracleVariant::ErwUniform
                                               : OracleVariant::WerwFrozenWeights;
    out.oracle = exact_selection_probabilities(g, cfg.kappa, variant);
    out.rho = cfg.resolved_rho(g);
    out.mc_runs = mc_runs;
    out.predicted_mean = predicted_mean_omega(g, cfg.kappa, out.rho, cfg.resolved_beta(g));

    const std::size_t m = g.edge_count();
    std::vector<double> sum(m, 0.0), sum_sq(m, 0.0);
    std::vector<CentralityVector> vectors;
    parallel_runs(g, cfg, mc_runs, jobs, {}, vectors);
    for (const auto& vec : vectors) {
        for (EdgeId e = 0; e < m; ++e) {
            double w = vec.omega(e, m);
            sum[e] += w;
            sum_sq[e] += w * w;
        }
    }

    out.measured_mean.resize(m);
    out.z_scores.resize(m);
    const double n = static_cast<double>(mc_runs);
    for (EdgeId e = 0; e < m; ++e) {
        out.measured_mean[e] = sum[e] / n;
        double var = std::max(0.0, sum_sq[e] / n - out.measured_mean[e] * out.measured_mean[e]);
        double se = std::sqrt(var / n);
        double diff = out.measured_mean[e] - out.predicted_mean[e];
        out.z_scores[e] = (se > 0.0) ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
    }
    return out;
}

BenchReport run_bench(const std::vector<std::size_t>& edge_sizes,
                      const std::vector<std::uint32_t>& kappas, std::uint64_t seed,
                      Variant variant, double min_sample_seconds) {
    if (edge_sizes.empty()) throw ConfigError("empty size list");
    if (kappas.empty()) throw ConfigError("empty kappa list");

    BenchReport report;
    for (std::size_t m : edge_sizes) {
        std::size_t n = std::max<std::size_t>(2, m / 8);
        Graph g = random_graph(n, m, seed);
        for (std::uint32_t kappa : kappas) {
            WalkConfig cfg;
            cfg.variant = variant;
            cfg.kappa = kappa;
            cfg.seed = seed;

            // Repeat the run until enough algorithm time accumulates, then
            // report time per run; keeps small cells out of timer noise.
            double total = 0.0;
            std::uint64_t reps = 0;
            while (total < min_sample_seconds || reps < 3) {
                cfg.seed = seed + reps;
                total += run_kpath(g, cfg).elapsed_seconds;
                ++reps;
            }

            BenchCell cell;
            cell.edge_count = m;
            cell.node_count = g.node_count();
            cell.kappa = kappa;
            cell.seconds_per_run = total / static_cast<double>(reps);
            cell.runs_timed = reps;
            report.cells.push_back(cell);
        }
    }

    auto find_cell = [&report](std::size_t m, std::uint32_t k) -> const BenchCell* {
        for (const auto& c : report.cells) {
            if (c.edge_count == m && c.kappa == k) return &c;
        }
        return nullptr;
    };

    for (std::uint32_t k : kappas) {
        for (std::size_t m : edge_sizes) {
            if (const BenchCell* a = find_cell(m, k); a) {
                if (const BenchCell* b = find_cell(m * 2, k); b) {
                    BenchRatio r;
                    r.axis = "edges";
                    r.kappa_from = r.kappa_to = k;
                    r.edges_from = m;
                    r.edges_to = m * 2;
                    r.ratio = b->seconds_per_run / a->seconds_per_run;
                    report.ratios.push_back(r);
                }
            }
        }
    }
    for (std::size_t m : edge_sizes) {
        for (std::uint32_t k : kappas) {
            if (const BenchCell* a = find_cell(m, k); a) {
                if (const BenchCell* b = find_cell(m, k * 2); b) {
                    BenchRatio r;
                    r.axis = "kappa";
                    r.edge_count = m;
                    r.edges_from = r.edges_to = m;
                    r.kappa_from = k;
                    r.kappa_to = k * 2;
                    r.ratio = b->seconds_per_run / a->seconds_per_run;
                    report.ratios.push_back(r);
                }
            }
        }
    }
    return report;
}

StatsReport run_stats(const std::vector<double>& omegas, std::size_t bins, bool log_bins,
                      const std::vector<double>* other) {
    StatsReport out;
    out.hist = histogram(omegas, bins, log_bins);
    out.ranks = rank_plot(omegas);
    out.rank_slope = rank_plot_slope(out.ranks);
    if (other) {
        out.has_cross_kappa = true;
        out.cross_kappa_spearman = spearman_rank(omegas, *other);
    }
    return out;
}

} // namespace kpath
