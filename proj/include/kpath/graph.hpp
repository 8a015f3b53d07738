#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kpath {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct IncidentEdge {
    EdgeId edge;
    NodeId neighbor;
};

struct BuildStats {
    std::size_t pairs_in = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

// Immutable undirected simple graph. Node and edge ids are dense, assigned
// in first-appearance order; original labels are kept in a side table.
// Incidence lists are sorted by EdgeId so every scan order is deterministic.
// Safe to share across threads after construction.
class Graph {
public:
    // Cleans the input: self-loops dropped, duplicate and reciprocal pairs
    // collapsed to one undirected edge. Throws ConfigError("empty graph")
    // if no edge survives.
    static Graph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return endpoints_.size(); }

    std::span<const IncidentEdge> incident(NodeId v) const {
        return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    // |I(v)| / |V|
    double normalized_degree(NodeId v) const {
        return static_cast<double>(degree(v)) / static_cast<double>(node_count());
    }

    // Uniform starting weight 1/|E|, the per-edge share of the unit budget.
    double initial_edge_weight() const {
        return 1.0 / static_cast<double>(edge_count());
    }

    std::pair<NodeId, NodeId> endpoints(EdgeId e) const { return endpoints_[e]; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    std::optional<NodeId> node_of(const std::string& label) const;

    const BuildStats& build_stats() const { return stats_; }

    // FNV-1a over counts and endpoint pairs; identifies the cleaned graph.
    std::uint64_t fingerprint() const;

private:
    Graph() = default;

    std::vector<std::size_t> offsets_;       // |V|+1, CSR offsets into incidence_
    std::vector<IncidentEdge> incidence_;    // 2|E| entries
    std::vector<std::pair<NodeId, NodeId>> endpoints_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_to_id_;
    BuildStats stats_;
};

// Uniform random simple graph with the requested counts; used by the
// benchmark and robustness experiments. Throws ConfigError if edge_count
// exceeds C(node_count, 2) or node_count < 2.
Graph random_graph(std::size_t node_count, std::size_t edge_count, std::uint64_t seed);

} // namespace kpath
