#include <doctest.h>

#include <cmath>

#include "kpath/errors.hpp"
#include "kpath/metrics.hpp"
#include "kpath/rng.hpp"

using namespace kpath;

namespace {

std::vector<double> random_vector(std::size_t n, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = 0.05 + rng.uniform_double();
    return v;
}

} // namespace

TEST_CASE("modified jaccard basics") {
    std::vector<double> x = {0.5, 1.0};
    std::vector<double> y = {1.0, 0.5};
    // Normalized gaps are both 0.5.
    CHECK(modified_jaccard(x, y, 0.1) == doctest::Approx(0.0));
    CHECK(modified_jaccard(x, y, 0.6) == doctest::Approx(1.0));
    CHECK(modified_jaccard(x, x, 0.01) == doctest::Approx(1.0));
}

TEST_CASE("jaccard is symmetric and monotone in tau") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_vector(40, rng);
        auto y = random_vector(40, rng);
        double j1 = modified_jaccard(x, y, 0.01);
        double j5 = modified_jaccard(x, y, 0.05);
        double j10 = modified_jaccard(x, y, 0.10);
        CHECK(j1 <= j5);
        CHECK(j5 <= j10);
        CHECK(modified_jaccard(y, x, 0.05) == doctest::Approx(j5));
        CHECK(modified_jaccard(x, x, 0.01) == doctest::Approx(1.0));
    }
}

TEST_CASE("jaccard rejects mismatched edge sets") {
    CHECK_THROWS_AS(modified_jaccard({1.0, 2.0}, {1.0}, 0.1), ConfigError);
}

TEST_CASE("pearson basics") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    CHECK(pearson(x, x) == doctest::Approx(1.0));
    std::vector<double> neg = {4.0, 3.0, 2.0, 1.0};
    CHECK(pearson(x, neg) == doctest::Approx(-1.0));
}

TEST_CASE("pearson is invariant under positive affine maps") {
    Rng rng(4);
    auto x = random_vector(50, rng);
    auto y = random_vector(50, rng);
    double base = pearson(x, y);
    std::vector<double> mapped(y);
    for (auto& v : mapped) v = 3.7 * v + 0.2;
    CHECK(pearson(x, mapped) == doctest::Approx(base).epsilon(1e-9));
    CHECK(pearson(x, mapped) == doctest::Approx(pearson(mapped, x)).epsilon(1e-12));

    std::vector<double> affine_of_x(x);
    for (auto& v : affine_of_x) v = 2.0 * v + 1.0;
    CHECK(pearson(x, affine_of_x) == doctest::Approx(1.0));
}

TEST_CASE("pearson rejects zero-variance input") {
    std::vector<double> flat = {1.0, 1.0, 1.0};
    std::vector<double> x = {1.0, 2.0, 3.0};
    CHECK_THROWS_WITH_AS(pearson(flat, x), "degenerate distribution", DegenerateError);
    CHECK_THROWS_AS(pearson(x, flat), DegenerateError);
}

TEST_CASE("euclidean and its average") {
    std::vector<double> x = {0.3, 0.4};
    std::vector<double> zero = {0.0, 0.0};
    CHECK(euclidean(x, zero) == doctest::Approx(0.5));
    CHECK(euclidean(x, x) == doctest::Approx(0.0));
    CHECK(avg_euclidean(x, zero, 2) == doctest::Approx(0.25));
}

TEST_CASE("reported avg L2 arithmetic: 1.61e-2 over 103689 edges") {
    CHECK(1.61e-2 / 103689.0 == doctest::Approx(1.55e-7).epsilon(0.005));
}

TEST_CASE("avg_euclidean times edge count equals euclidean") {
    Rng rng(5);
    auto x = random_vector(64, rng);
    auto y = random_vector(64, rng);
    CHECK(avg_euclidean(x, y, 64) * 64.0 == doctest::Approx(euclidean(x, y)).epsilon(1e-12));
}

TEST_CASE("spearman is invariant under strictly monotone maps") {
    Rng rng(6);
    auto x = random_vector(40, rng);
    auto y = random_vector(40, rng);
    double base = spearman_rank(x, y);
    std::vector<double> cubed(y);
    for (auto& v : cubed) v = std::exp(v);
    CHECK(spearman_rank(x, cubed) == doctest::Approx(base).epsilon(1e-12));
    CHECK(spearman_rank(x, x) == doctest::Approx(1.0));

    std::vector<double> reversed;
    for (auto it = x.rbegin(); it != x.rend(); ++it) reversed.push_back(*it);
    std::vector<double> increasing(x);
    std::sort(increasing.begin(), increasing.end());
    std::vector<double> decreasing(increasing);
    std::reverse(decreasing.begin(), decreasing.end());
    CHECK(spearman_rank(increasing, decreasing) == doctest::Approx(-1.0));
}

TEST_CASE("spearman handles ties with average ranks") {
    std::vector<double> x = {1.0, 2.0, 2.0, 3.0};
    std::vector<double> y = {1.0, 2.5, 2.5, 4.0};
    CHECK(spearman_rank(x, y) == doctest::Approx(1.0));
    std::vector<double> flat = {1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(spearman_rank(x, flat), DegenerateError);
}

TEST_CASE("strong edge filter") {
    std::vector<double> omega = {0.25, 0.5, 0.75, 0.25};
    CHECK(strong_edge_filter(omega, 0.0).size() == 4);
    CHECK(strong_edge_filter(omega, 1.0).empty());
    // Threshold at the floor keeps exactly the traversed edges.
    auto strong = strong_edge_filter(omega, 0.25);
    CHECK(strong == std::vector<EdgeId>{1, 2});
}

TEST_CASE("histogram normalizes and handles a uniform vector") {
    std::vector<double> flat(10, 0.5);
    auto h = histogram(flat, 4);
    double occupied = 0.0;
    int occupied_bins = 0;
    for (double p : h.probabilities) {
        if (p > 0.0) {
            ++occupied_bins;
            occupied += p;
        }
    }
    CHECK(occupied_bins == 1);
    CHECK(occupied == doctest::Approx(1.0));

    Rng rng(8);
    auto v = random_vector(200, rng);
    for (bool log_bins : {false, true}) {
        auto hh = histogram(v, 16, log_bins);
        double total = 0.0;
        for (double p : hh.probabilities) total += p;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("power-law counts give a negative rank slope") {
    std::vector<double> v;
    for (std::size_t r = 1; r <= 500; ++r) {
        v.push_back(std::pow(static_cast<double>(r), -1.2));
    }
    auto points = rank_plot(v);
    CHECK(points.front().value == doctest::Approx(1.0));
    CHECK(points.front().rank == 1);
    double slope = rank_plot_slope(points);
    CHECK(slope == doctest::Approx(-1.2).epsilon(1e-6));
}

TEST_CASE("compare_runs aggregates pairwise metrics") {
    std::vector<std::vector<double>> runs = {
        {0.2, 0.4, 0.6}, {0.2, 0.4, 0.6}, {0.25, 0.35, 0.65}};
    auto report = compare_runs(runs, {1, 2, 3}, {0.01, 0.05, 0.10}, 3);
    CHECK(report.pairs.size() == 3);

    // Identical pair: flagged degenerate, J = 1, L2 = 0.
    const auto& first = report.pairs[0];
    CHECK(first.pearson == doctest::Approx(1.0));
    CHECK(first.pearson_degenerate);
    CHECK(first.l2 == doctest::Approx(0.0));
    for (double j : first.jaccard) CHECK(j == doctest::Approx(1.0));

    for (const auto& pc : report.pairs) {
        CHECK(pc.avg_l2 == doctest::Approx(pc.l2 / 3.0).epsilon(1e-15));
        CHECK(pc.jaccard[0] <= pc.jaccard[1]);
        CHECK(pc.jaccard[1] <= pc.jaccard[2]);
    }
}
