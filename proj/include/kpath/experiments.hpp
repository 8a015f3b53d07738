#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/metrics.hpp"
#include "kpath/oracle.hpp"
#include "kpath/walk.hpp"

namespace kpath {

// n independent runs with derived seeds (base seed + run index unless
// explicit seeds are given), compared pairwise. Runs execute concurrently
// up to `jobs` threads; each owns its private state.
RobustnessReport run_robustness(const Graph& g, const WalkConfig& cfg, std::size_t runs,
                                const std::vector<double>& taus, std::size_t jobs,
                                const std::vector<std::uint64_t>& explicit_seeds = {});

struct OracleComparison {
    OracleResult oracle;
    std::vector<double> predicted_mean;  // Erw closed form
    std::vector<double> measured_mean;   // over mc_runs independent runs
    std::vector<double> z_scores;        // (measured - predicted) / stderr
    std::uint64_t mc_runs = 0;
    std::uint64_t rho = 0;
};

// Exact oracle plus a Monte-Carlo cross-check: mc_runs independent runs
// with seeds seed, seed+1, ... and the per-edge z-score of the measured
// mean omega against the closed-form prediction.
OracleComparison run_oracle_comparison(const Graph& g, const WalkConfig& cfg,
                                       std::uint64_t mc_runs, std::size_t jobs = 1);

struct BenchCell {
    std::size_t edge_count = 0;
    std::size_t node_count = 0;
    std::uint32_t kappa = 0;
    double seconds_per_run = 0.0;
    std::uint64_t runs_timed = 0;
};

struct BenchRatio {
    std::string axis;  // "edges" or "kappa"
    std::size_t edge_count = 0;
    std::uint32_t kappa_from = 0;
    std::uint32_t kappa_to = 0;
    std::size_t edges_from = 0;
    std::size_t edges_to = 0;
    double ratio = 0.0;
};

struct BenchReport {
    std::vector<BenchCell> cells;
    std::vector<BenchRatio> ratios;  // per |E|-doubling and per kappa-doubling
};

// Synthetic uniform random graphs with |V| = |E| / 8; the timer covers the
// algorithm only and each cell is sampled until at least min_sample_seconds
// of work accumulates.
BenchReport run_bench(const std::vector<std::size_t>& edge_sizes,
                      const std::vector<std::uint32_t>& kappas, std::uint64_t seed,
                      Variant variant = Variant::Werw, double min_sample_seconds = 0.05);

struct StatsReport {
    Histogram hist;
    std::vector<RankPoint> ranks;
    double rank_slope = 0.0;
    bool has_cross_kappa = false;
    double cross_kappa_spearman = 0.0;
};

// Distribution shape of one centrality vector, optionally with a Spearman
// comparison against a second vector over the same edge set.
StatsReport run_stats(const std::vector<double>& omegas, std::size_t bins, bool log_bins,
                      const std::vector<double>* other = nullptr);

} // namespace kpath
