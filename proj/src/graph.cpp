#include "kpath/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "kpath/errors.hpp"
#include "kpath/rng.hpp"

namespace kpath {

Graph Graph::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Graph g;
    g.stats_.pairs_in = pairs.size();

    auto intern = [&g](const std::string& label) -> NodeId {
        auto it = g.label_to_id_.find(label);
        if (it != g.label_to_id_.end()) return it->second;
        NodeId id = static_cast<NodeId>(g.labels_.size());
        g.labels_.push_back(label);
        g.label_to_id_.emplace(label, id);
        return id;
    };

    // Unordered endpoint pair -> first EdgeId seen.
    std::unordered_map<std::uint64_t, EdgeId> seen;
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            ++g.stats_.self_loops_dropped;
            continue;
        }
        NodeId u = intern(a);
        NodeId v = intern(b);
        NodeId lo = std::min(u, v);
        NodeId hi = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
        if (seen.contains(key)) {
            ++g.stats_.duplicates_collapsed;
            continue;
        }
        seen.emplace(key, static_cast<EdgeId>(g.endpoints_.size()));
        g.endpoints_.emplace_back(u, v);
    }

    if (g.endpoints_.empty()) throw ConfigError("empty graph");

    const std::size_t n = g.labels_.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : g.endpoints_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.incidence_.resize(2 * g.endpoints_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges emitted in EdgeId order, so each incidence list ends up
    // sorted by EdgeId.
    for (EdgeId e = 0; e < g.endpoints_.size(); ++e) {
        auto [u, v] = g.endpoints_[e];
        g.incidence_[cursor[u]++] = {e, v};
        g.incidence_[cursor[v]++] = {e, u};
    }

    return g;
}

std::optional<NodeId> Graph::node_of(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(node_count());
    mix(edge_count());
    for (const auto& [u, v] : endpoints_) {
        mix((static_cast<std::uint64_t>(u) << 32) | v);
    }
    return h;
}

Graph random_graph(std::size_t node_count, std::size_t edge_count, std::uint64_t seed) {
    if (node_count < 2) throw ConfigError("random graph needs at least 2 nodes");
    const std::uint64_t n = node_count;
    if (edge_count > n * (n - 1) / 2) {
        throw ConfigError("edge count exceeds simple-graph capacity");
    }

    Rng rng(seed);
    std::unordered_set<std::uint64_t> used;
    used.reserve(edge_count * 2);
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(edge_count);
    while (pairs.size() < edge_count) {
        std::uint64_t u = rng.uniform_index(n);
        std::uint64_t v = rng.uniform_index(n);
        if (u == v) continue;
        std::uint64_t lo = std::min(u, v);
        std::uint64_t hi = std::max(u, v);
        if (!used.insert((lo << 32) | hi).second) continue;
        pairs.emplace_back(std::to_string(u), std::to_string(v));
    }
    return Graph::from_pairs(pairs);
}

} // namespace kpath
