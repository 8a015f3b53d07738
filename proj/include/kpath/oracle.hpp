#pragma once

#include <cstdint>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// Which choice rule the enumeration follows at each step. The weighted
// variant evaluates weight-proportional selection with every weight frozen
// at its initial uniform value; evolving weights are out of reach for an
// exact enumeration.
enum class OracleVariant { ErwUniform, WerwFrozenWeights };

struct OracleResult {
    std::uint32_t kappa = 0;
    // per_source_edge_prob[s][e] = probability that a bounded self-avoiding
    // walk started at s traverses edge e.
    std::vector<std::vector<double>> per_source_edge_prob;
    // L(e) = sum over sources of per_source_edge_prob[s][e].
    std::vector<double> centrality;
    // Probability mass reaching a leaf walk, per source; 1 up to rounding.
    std::vector<double> per_source_leaf_mass;
};

// Exhaustive expansion of the walk's probability tree. Every maximal walk
// (length kappa, or stuck earlier) is a leaf; an edge collects the mass of
// all leaves whose walk traverses it. Guarded: |V| <= 12 and kappa <= 6,
// else SizeLimitError.
OracleResult exact_selection_probabilities(const Graph& g, std::uint32_t kappa,
                                           OracleVariant variant);

std::vector<double> exact_centrality(const Graph& g, std::uint32_t kappa,
                                     OracleVariant variant);

// Closed form for the expected Erw output: 1/|E| + beta * rho * L(e) / |V|.
// With beta = 1/|E| this is the usual 1/|E| + (rho / (|E||V|)) L(e).
std::vector<double> predicted_mean_omega(const Graph& g, std::uint32_t kappa,
                                         std::uint64_t rho, double beta);

struct WerwBound {
    double lower = 0.0;  // xi' L(e) + 1/|E|
    double upper = 0.0;  // xi'' L(e) + 1/|E|
    bool pass = false;
};

// Werw sanity envelope from the frozen-weight oracle: xi' = rho * min_s
// P(s) / |E| and xi'' = rho * max_s P(s) / |E| with P(s) = deg(s) / 2|E|.
// Each measured mean must land inside [lower - slack, upper + slack].
std::vector<WerwBound> werw_bound_check(const Graph& g, std::uint32_t kappa,
                                        std::uint64_t rho,
                                        const std::vector<double>& mean_omega,
                                        double slack = 0.0);

} // namespace kpath
