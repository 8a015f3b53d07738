#include "kpath/oracle.hpp"

#include <algorithm>

#include "kpath/errors.hpp"

namespace kpath {

namespace {

constexpr std::size_t kMaxNodes = 12;
constexpr std::uint32_t kMaxKappa = 6;

struct Enumerator {
    const Graph& g;
    OracleVariant variant;
    std::uint32_t kappa;
    std::vector<std::uint8_t> traversed;
    std::vector<double>& edge_prob;   // output for the current source
    double leaf_mass = 0.0;

    // Expand every branch from `node` with accumulated probability `p`.
    // The mass of all leaves below a traversed edge equals the branch
    // probability at the moment of traversal, so each edge is credited
    // right when it is taken.
    void expand(NodeId node, std::uint32_t depth, double p) {
        if (depth == kappa) {
            leaf_mass += p;
            return;
        }
        auto inc = g.incident(node);
        double total_weight = 0.0;
        std::size_t candidates = 0;
        for (const auto& ie : inc) {
            if (traversed[ie.edge]) continue;
            ++candidates;
            total_weight += 1.0;  // frozen uniform weights: every edge 1/|E|
        }
        if (candidates == 0) {
            leaf_mass += p;  // stuck leaf
            return;
        }
        for (const auto& ie : inc) {
            if (traversed[ie.edge]) continue;
            // Uniform and frozen-weight selection coincide while all
            // weights are equal; the division below is written against
            // the per-candidate weight to keep the rule explicit.
            double branch = p * (1.0 / total_weight);
            edge_prob[ie.edge] += branch;
            traversed[ie.edge] = 1;
            expand(ie.neighbor, depth + 1, branch);
            traversed[ie.edge] = 0;
        }
    }
};

} // namespace

OracleResult exact_selection_probabilities(const Graph& g, std::uint32_t kappa,
                                           OracleVariant variant) {
    if (g.node_count() > kMaxNodes || kappa > kMaxKappa) {
        throw SizeLimitError("oracle size limit: need |V| <= 12 and kappa <= 6");
    }
    if (kappa < 1) throw ConfigError("kappa must be >= 1");

    OracleResult out;
    out.kappa = kappa;
    out.per_source_edge_prob.assign(g.node_count(), std::vector<double>(g.edge_count(), 0.0));
    out.centrality.assign(g.edge_count(), 0.0);
    out.per_source_leaf_mass.assign(g.node_count(), 0.0);

    for (NodeId s = 0; s < g.node_count(); ++s) {
        Enumerator en{g, variant, kappa, std::vector<std::uint8_t>(g.edge_count(), 0),
                      out.per_source_edge_prob[s]};
        en.expand(s, 0, 1.0);
        out.per_source_leaf_mass[s] = en.leaf_mass;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            out.centrality[e] += out.per_source_edge_prob[s][e];
        }
    }
    return out;
}

std::vector<double> exact_centrality(const Graph& g, std::uint32_t kappa,
                                     OracleVariant variant) {
    return exact_selection_probabilities(g, kappa, variant).centrality;
}

std::vector<double> predicted_mean_omega(const Graph& g, std::uint32_t kappa,
                                         std::uint64_t rho, double beta) {
    auto centrality = exact_centrality(g, kappa, OracleVariant::ErwUniform);
    const double base = 1.0 / static_cast<double>(g.edge_count());
    const double scale = beta * static_cast<double>(rho) / static_cast<double>(g.node_count());
    std::vector<double> out(centrality.size());
    for (std::size_t e = 0; e < centrality.size(); ++e) {
        out[e] = base + scale * centrality[e];
    }
    return out;
}

std::vector<WerwBound> werw_bound_check(const Graph& g, std::uint32_t kappa,
                                        std::uint64_t rho,
                                        const std::vector<double>& mean_omega,
                                        double slack) {
    auto centrality = exact_centrality(g, kappa, OracleVariant::WerwFrozenWeights);
    if (mean_omega.size() != centrality.size()) {
        throw ConfigError("mean_omega size does not match edge count");
    }

    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    double min_p = 1.0, max_p = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double p = static_cast<double>(g.degree(v)) / two_m;
        min_p = std::min(min_p, p);
        max_p = std::max(max_p, p);
    }

    const double base = 1.0 / static_cast<double>(g.edge_count());
    const double xi_lo = static_cast<double>(rho) * min_p / static_cast<double>(g.edge_count());
    const double xi_hi = static_cast<double>(rho) * max_p / static_cast<double>(g.edge_count());

    std::vector<WerwBound> out(centrality.size());
    for (std::size_t e = 0; e < centrality.size(); ++e) {
        out[e].lower = xi_lo * centrality[e] + base;
        out[e].upper = xi_hi * centrality[e] + base;
        out[e].pass = mean_omega[e] >= out[e].lower - slack &&
                      mean_omega[e] <= out[e].upper + slack;
    }
    return out;
}

} // namespace kpath
