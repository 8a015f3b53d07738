#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// All comparison measures take per-edge centrality vectors over the same
// edge set (same graph, same indexing). Mismatched lengths are errors.

// Fraction of edges whose max-normalized values differ by at most tau.
double modified_jaccard(const std::vector<double>& x, const std::vector<double>& y, double tau);

// Sample Pearson coefficient; DegenerateError when either vector has zero
// variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

double euclidean(const std::vector<double>& x, const std::vector<double>& y);
double avg_euclidean(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t edge_count);

// Pearson over average-rank transforms; invariant under strictly monotone
// maps of either argument.
double spearman_rank(const std::vector<double>& x, const std::vector<double>& y);

// Edges with omega strictly greater than the threshold.
std::vector<EdgeId> strong_edge_filter(const std::vector<double>& omega, double threshold);

struct Histogram {
    std::vector<double> bin_edges;      // size bins + 1
    std::vector<double> probabilities;  // size bins, sums to 1
};

Histogram histogram(const std::vector<double>& values, std::size_t bins, bool log_bins = false);

struct RankPoint {
    std::size_t rank;  // 1-based
    double value;
};

// Values sorted descending with their ranks.
std::vector<RankPoint> rank_plot(const std::vector<double>& values);

// Least-squares slope of log10(value) against log10(rank).
double rank_plot_slope(const std::vector<RankPoint>& points);

struct PairComparison {
    std::size_t run_a = 0;
    std::size_t run_b = 0;
    std::vector<double> jaccard;  // aligned with RobustnessReport::taus
    double pearson = 0.0;
    bool pearson_degenerate = false;  // identical vectors, reported as 1
    double l2 = 0.0;
    double avg_l2 = 0.0;
    double spearman = 0.0;
    bool spearman_degenerate = false;
};

struct RobustnessReport {
    std::vector<std::uint64_t> run_seeds;
    std::vector<double> taus;
    std::vector<PairComparison> pairs;
    // Means over all C(n,2) pairs.
    std::vector<double> mean_jaccard;
    double mean_pearson = 0.0;
    double mean_l2 = 0.0;
    double mean_avg_l2 = 0.0;
    double mean_spearman = 0.0;
};

// All pairwise comparisons between runs. Bit-identical vectors would make
// the correlation formulas divide by zero; those pairs are flagged
// degenerate and reported as 1.
RobustnessReport compare_runs(const std::vector<std::vector<double>>& omegas,
                              const std::vector<std::uint64_t>& run_seeds,
                              const std::vector<double>& taus,
                              std::size_t edge_count);

} // namespace kpath
