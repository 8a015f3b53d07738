#include "kpath/walk.hpp"

#include <algorithm>
#include <chrono>

#include "kpath/errors.hpp"

namespace kpath {

std::vector<double> CentralityVector::omegas(std::size_t edge_count) const {
    std::vector<double> out(counts.size());
    for (EdgeId e = 0; e < counts.size(); ++e) out[e] = omega(e, edge_count);
    return out;
}

SourceSampler::SourceSampler(const Graph& g, Variant variant)
    : graph_(g), variant_(variant) {
    if (variant == Variant::Werw) {
        cumulative_degree_.resize(g.node_count());
        std::uint64_t acc = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            acc += g.degree(v);
            cumulative_degree_[v] = acc;
        }
    }
}

NodeId SourceSampler::sample(Rng& rng) const {
    if (variant_ == Variant::Erw) {
        return static_cast<NodeId>(rng.uniform_index(graph_.node_count()));
    }
    // Degree-proportional: draw t in [0, 2|E|) and binary-search the
    // cumulative array. Integer arithmetic keeps this exact.
    std::uint64_t t = rng.uniform_index(cumulative_degree_.back());
    auto it = std::upper_bound(cumulative_degree_.begin(), cumulative_degree_.end(), t);
    return static_cast<NodeId>(it - cumulative_degree_.begin());
}

std::optional<EdgeId> select_next_edge(const Graph& g, NodeId v, const WalkState& state,
                                       Variant variant, double beta, Rng& rng) {
    auto inc = g.incident(v);

    if (variant == Variant::Erw) {
        std::size_t candidates = 0;
        for (const auto& ie : inc)
            if (!state.traversed(ie.edge)) ++candidates;
        if (candidates == 0) return std::nullopt;
        std::uint64_t k = rng.uniform_index(candidates);
        for (const auto& ie : inc) {
            if (state.traversed(ie.edge)) continue;
            if (k == 0) return ie.edge;
            --k;
        }
        return std::nullopt;  // unreachable
    }

    const double base = 1.0 / static_cast<double>(g.edge_count());
    double total = 0.0;
    std::size_t candidates = 0;
    for (const auto& ie : inc) {
        if (state.traversed(ie.edge)) continue;
        total += base + static_cast<double>(state.counts()[ie.edge]) * beta;
        ++candidates;
    }
    if (candidates == 0) return std::nullopt;

    double target = rng.uniform_double() * total;
    double acc = 0.0;
    std::optional<EdgeId> last;
    for (const auto& ie : inc) {
        if (state.traversed(ie.edge)) continue;
        acc += base + static_cast<double>(state.counts()[ie.edge]) * beta;
        last = ie.edge;
        if (target < acc) return ie.edge;
    }
    return last;  // rounding pushed target past the final bucket
}

std::vector<EdgeId> message_propagation(const Graph& g, WalkState& state, NodeId start,
                                        const WalkConfig& cfg, Rng& rng) {
    const double beta = cfg.resolved_beta(g);
    std::vector<EdgeId> path;
    NodeId current = start;
    for (std::uint32_t n = 0; n < cfg.kappa; ++n) {
        auto next = select_next_edge(g, current, state, cfg.variant, beta, rng);
        if (!next) break;
        state.mark(*next);
        path.push_back(*next);
        auto [u, v] = g.endpoints(*next);
        current = (current == u) ? v : u;
    }
    state.clear_flags();
    return path;
}

CentralityVector run_kpath(const Graph& g, const WalkConfig& cfg) {
    if (cfg.kappa < 1) throw ConfigError("kappa must be >= 1");
    const std::uint64_t rho = cfg.resolved_rho(g);
    const double beta = cfg.resolved_beta(g);
    if (rho < 1) throw ConfigError("rho must be >= 1");
    if (!(beta > 0.0)) throw ConfigError("beta must be > 0");

    Rng rng(cfg.seed);
    SourceSampler sources(g, cfg.variant);
    WalkState state(g);

    auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < rho; ++i) {
        NodeId source = sources.sample(rng);
        message_propagation(g, state, source, cfg, rng);
    }
    auto t1 = std::chrono::steady_clock::now();

    CentralityVector out;
    out.counts = state.counts();
    out.config = cfg;
    out.rho = rho;
    out.beta = beta;
    out.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    out.graph_fingerprint = g.fingerprint();
    return out;
}

} // namespace kpath
