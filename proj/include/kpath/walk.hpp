#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/rng.hpp"

namespace kpath {

enum class Variant { Erw, Werw };

// Full determinism contract: identical (graph, config, seed) gives
// identical counts. rho and beta default to |E|-1 and 1/|E| when unset.
struct WalkConfig {
    Variant variant = Variant::Werw;
    std::uint32_t kappa = 20;
    std::optional<std::uint64_t> rho;
    std::optional<double> beta;
    std::uint64_t seed = 0;

    std::uint64_t resolved_rho(const Graph& g) const {
        return rho ? *rho : static_cast<std::uint64_t>(g.edge_count()) - 1;
    }
    double resolved_beta(const Graph& g) const {
        return beta ? *beta : 1.0 / static_cast<double>(g.edge_count());
    }
};

// Mutable per-run state. Traversal flags are cleared between iterations
// through an undo list, so a reset costs the walk length instead of |E|.
class WalkState {
public:
    explicit WalkState(const Graph& g)
        : counts_(g.edge_count(), 0), traversed_(g.edge_count(), 0) {}

    bool traversed(EdgeId e) const { return traversed_[e] != 0; }

    void mark(EdgeId e) {
        traversed_[e] = 1;
        undo_.push_back(e);
        ++counts_[e];
    }

    void clear_flags() {
        for (EdgeId e : undo_) traversed_[e] = 0;
        undo_.clear();
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint8_t> traversed_;
    std::vector<EdgeId> undo_;
};

struct CentralityVector {
    std::vector<std::uint64_t> counts;
    WalkConfig config;
    std::uint64_t rho = 0;      // resolved
    double beta = 0.0;          // resolved
    double elapsed_seconds = 0.0;
    std::uint64_t graph_fingerprint = 0;

    // omega(e) = 1/|E| + count(e) * beta; with the defaults this is
    // (1 + count) / |E| and lies in [1/|E|, 1].
    double omega(EdgeId e, std::size_t edge_count) const {
        return 1.0 / static_cast<double>(edge_count) +
               static_cast<double>(counts[e]) * beta;
    }
    std::vector<double> omegas(std::size_t edge_count) const;
};

// Source choice: Erw uniform over V, Werw proportional to normalized
// degree, i.e. deg(v) / 2|E|. The Werw path samples through a precomputed
// cumulative-degree array; build one per run with SourceSampler.
class SourceSampler {
public:
    SourceSampler(const Graph& g, Variant variant);
    NodeId sample(Rng& rng) const;

private:
    const Graph& graph_;
    Variant variant_;
    std::vector<std::uint64_t> cumulative_degree_;  // Werw only
};

// One step: pick an untraversed edge incident to v, or nullopt when all
// are flagged (or v is isolated). Erw is uniform over the candidates;
// Werw is proportional to the current weight 1/|E| + count * beta.
std::optional<EdgeId> select_next_edge(const Graph& g, NodeId v, const WalkState& state,
                                       Variant variant, double beta, Rng& rng);

// One bounded self-avoiding walk from `start`: traverse at most kappa
// edges, flagging and awarding each, then clear the flags. Returns the
// traversed edges in order.
std::vector<EdgeId> message_propagation(const Graph& g, WalkState& state, NodeId start,
                                        const WalkConfig& cfg, Rng& rng);

// rho iterations of source selection + message propagation.
CentralityVector run_kpath(const Graph& g, const WalkConfig& cfg);

} // namespace kpath
