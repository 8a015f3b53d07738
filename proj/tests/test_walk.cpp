#include <doctest.h>

#include <cmath>
#include <set>

#include "kpath/errors.hpp"
#include "kpath/ingest.hpp"
#include "kpath/walk.hpp"

using namespace kpath;

namespace {

Graph p3() { return parse_edge_list("a b\nb c\n"); }

}  // namespace

TEST_CASE("erw source selection is uniform") {
    Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 2\n");
    const std::size_t n = g.node_count();
    const std::size_t draws = 1000000;

    Rng rng(11);
    SourceSampler sampler(g, Variant::Erw);
    std::vector<std::size_t> hits(n, 0);
    for (std::size_t i = 0; i < draws; ++i) ++hits[sampler.sample(rng)];

    const double p = 1.0 / static_cast<double>(n);
    const double sigma = std::sqrt(p * (1 - p) / draws);
    for (std::size_t v = 0; v < n; ++v) {
        double freq = static_cast<double>(hits[v]) / draws;
        CHECK(std::abs(freq - p) < 3.5 * sigma);
    }
}

TEST_CASE("werw source selection is degree proportional on P3") {
    Graph g = p3();
    Rng rng(12);
    SourceSampler sampler(g, Variant::Werw);
    const std::size_t draws = 1000000;
    std::vector<std::size_t> hits(3, 0);
    for (std::size_t i = 0; i < draws; ++i) ++hits[sampler.sample(rng)];

    // deg/(2|E|) with labels a,b,c interned in order: 1/4, 1/2, 1/4
    std::vector<double> expected = {0.25, 0.5, 0.25};
    for (NodeId v = 0; v < 3; ++v) {
        double freq = static_cast<double>(hits[v]) / draws;
        double sigma = std::sqrt(expected[v] * (1 - expected[v]) / draws);
        CHECK(std::abs(freq - expected[v]) < 4 * sigma);
    }
}

TEST_CASE("werw source selection is uniform on a regular graph") {
    Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");  // 4-cycle
    Rng rng(13);
    SourceSampler sampler(g, Variant::Werw);
    const std::size_t draws = 400000;
    std::vector<std::size_t> hits(4, 0);
    for (std::size_t i = 0; i < draws; ++i) ++hits[sampler.sample(rng)];
    double sigma = std::sqrt(0.25 * 0.75 / draws);
    for (NodeId v = 0; v < 4; ++v) {
        CHECK(std::abs(static_cast<double>(hits[v]) / draws - 0.25) < 4 * sigma);
    }
}

TEST_CASE("select_next_edge returns none when everything incident is flagged") {
    Graph g = p3();
    WalkState state(g);
    state.mark(0);
    state.mark(1);
    Rng rng(1);
    NodeId b = *g.node_of("b");
    CHECK(!select_next_edge(g, b, state, Variant::Erw, 0.5, rng).has_value());
    CHECK(!select_next_edge(g, b, state, Variant::Werw, 0.5, rng).has_value());
}

TEST_CASE("erw edge selection is uniform over untraversed candidates") {
    // Star with 4 leaves; flag one edge, the other 3 should be uniform.
    Graph g = parse_edge_list("c 0\nc 1\nc 2\nc 3\n");
    WalkState state(g);
    state.mark(0);
    NodeId center = *g.node_of("c");

    Rng rng(21);
    const std::size_t draws = 100000;
    std::vector<std::size_t> hits(4, 0);
    for (std::size_t i = 0; i < draws; ++i) {
        auto e = select_next_edge(g, center, state, Variant::Erw, 0.25, rng);
        REQUIRE(e.has_value());
        ++hits[*e];
    }
    CHECK(hits[0] == 0);

    // Chi-squared against uniform 1/3 over the three candidates, 2 dof;
    // 99.9th percentile is 13.8.
    double chi2 = 0.0;
    double expected = draws / 3.0;
    for (EdgeId e = 1; e < 4; ++e) {
        double d = static_cast<double>(hits[e]) - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 13.8);
}

TEST_CASE("werw edge selection follows current weights") {
    // Two untraversed incident edges with counts 3 and 1, |E| = 4, default
    // beta: weights 1.0 and 0.5, so probabilities 2/3 and 1/3.
    Graph g = parse_edge_list("c 0\nc 1\nc 2\nc 3\n");
    const double beta = 0.25;
    WalkState state(g);
    for (int i = 0; i < 3; ++i) state.mark(0);
    state.mark(1);
    state.clear_flags();
    state.mark(2);
    state.mark(3);
    NodeId center = *g.node_of("c");

    Rng rng(22);
    const std::size_t draws = 100000;
    std::size_t hits0 = 0;
    for (std::size_t i = 0; i < draws; ++i) {
        auto e = select_next_edge(g, center, state, Variant::Werw, beta, rng);
        REQUIRE(e.has_value());
        REQUIRE(*e <= 1);
        if (*e == 0) ++hits0;
    }
    double p = 2.0 / 3.0;
    double sigma = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(static_cast<double>(hits0) / draws - p) < 4 * sigma);
}

TEST_CASE("single-edge graph walks exactly that edge") {
    Graph g = parse_edge_list("a b\n");
    WalkConfig cfg;
    cfg.variant = Variant::Erw;
    cfg.kappa = 5;
    cfg.rho = 1;
    WalkState state(g);
    Rng rng(3);
    auto path = message_propagation(g, state, 0, cfg, rng);
    CHECK(path == std::vector<EdgeId>{0});
    CHECK(state.counts()[0] == 1);
}

TEST_CASE("P3 from an endpoint with kappa 2 is the forced path") {
    Graph g = p3();
    WalkConfig cfg;
    cfg.variant = Variant::Erw;
    cfg.kappa = 2;
    WalkState state(g);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        auto path = message_propagation(g, state, *g.node_of("a"), cfg, rng);
        CHECK(path == std::vector<EdgeId>{0, 1});
        state = WalkState(g);
    }
}

TEST_CASE("walks are simple connected paths and flags drain") {
    Graph g = random_graph(30, 80, 5);
    WalkConfig cfg;
    cfg.variant = Variant::Werw;
    cfg.kappa = 10;
    WalkState state(g);
    Rng rng(6);
    for (int iter = 0; iter < 200; ++iter) {
        NodeId start = static_cast<NodeId>(rng.uniform_index(g.node_count()));
        auto path = message_propagation(g, state, start, cfg, rng);
        CHECK(path.size() <= cfg.kappa);

        std::set<EdgeId> unique(path.begin(), path.end());
        CHECK(unique.size() == path.size());

        // Consecutive edges share the walk's current endpoint.
        NodeId at = start;
        for (EdgeId e : path) {
            auto [u, v] = g.endpoints(e);
            CHECK((u == at || v == at));
            at = (u == at) ? v : u;
        }

        // Flags cleared: every edge selectable again.
        for (EdgeId e : path) CHECK(!state.traversed(e));
    }
}

TEST_CASE("run_kpath is deterministic") {
    Graph g = random_graph(60, 150, 17);
    WalkConfig cfg;
    cfg.variant = Variant::Werw;
    cfg.kappa = 8;
    cfg.seed = 123;
    auto a = run_kpath(g, cfg);
    auto b = run_kpath(g, cfg);
    CHECK(a.counts == b.counts);

    cfg.seed = 124;
    auto c = run_kpath(g, cfg);
    CHECK(a.counts != c.counts);
}

TEST_CASE("defaults keep omega in [1/|E|, 1] and respect the budget") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 4 + rng.uniform_index(30);
        std::size_t m = 3 + rng.uniform_index(n * (n - 1) / 2 - 2);
        Graph g = random_graph(n, m, rng.next_u64());

        WalkConfig cfg;
        cfg.variant = trial % 2 ? Variant::Erw : Variant::Werw;
        cfg.kappa = 1 + static_cast<std::uint32_t>(rng.uniform_index(20));
        cfg.seed = rng.next_u64();
        auto vec = run_kpath(g, cfg);

        const std::size_t edges = g.edge_count();
        std::uint64_t total = 0;
        for (EdgeId e = 0; e < edges; ++e) {
            double w = vec.omega(e, edges);
            CHECK(w >= 1.0 / static_cast<double>(edges) - 1e-12);
            CHECK(w <= 1.0 + 1e-12);
            total += vec.counts[e];
        }
        CHECK(total <= vec.rho * cfg.kappa);
    }
}

TEST_CASE("single-edge run matches the closed form") {
    Graph g = parse_edge_list("a b\n");
    WalkConfig cfg;
    cfg.variant = Variant::Erw;
    cfg.kappa = 1;
    cfg.rho = 5;
    cfg.beta = 1.0;
    for (std::uint64_t seed : {0ull, 7ull, 99ull}) {
        cfg.seed = seed;
        auto vec = run_kpath(g, cfg);
        CHECK(vec.omega(0, 1) == doctest::Approx(6.0));
    }
}

TEST_CASE("invalid configs are rejected") {
    Graph g = p3();
    WalkConfig cfg;
    cfg.kappa = 0;
    CHECK_THROWS_AS(run_kpath(g, cfg), ConfigError);
    cfg.kappa = 2;
    cfg.rho = 0;
    CHECK_THROWS_AS(run_kpath(g, cfg), ConfigError);
    cfg.rho = 1;
    cfg.beta = 0.0;
    CHECK_THROWS_AS(run_kpath(g, cfg), ConfigError);
}
