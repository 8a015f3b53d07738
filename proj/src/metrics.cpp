#include "kpath/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kpath/errors.hpp"

namespace kpath {

namespace {

void check_same_size(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty()) {
        throw ConfigError("mismatched edge sets");
    }
}

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Average ranks, ties shared.
std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double modified_jaccard(const std::vector<double>& x, const std::vector<double>& y, double tau) {
    check_same_size(x, y);
    double max_x = *std::max_element(x.begin(), x.end());
    double max_y = *std::max_element(y.begin(), y.end());
    if (max_x <= 0.0 || max_y <= 0.0) throw ConfigError("non-positive centrality maximum");
    std::size_t within = 0;
    for (std::size_t e = 0; e < x.size(); ++e) {
        if (std::abs(x[e] / max_x - y[e] / max_y) <= tau) ++within;
    }
    return static_cast<double>(within) / static_cast<double>(x.size());
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    check_same_size(x, y);
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0) throw DegenerateError("degenerate distribution");
    return cov / std::sqrt(vx * vy);
}

double euclidean(const std::vector<double>& x, const std::vector<double>& y) {
    check_same_size(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double avg_euclidean(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t edge_count) {
    return euclidean(x, y) / static_cast<double>(edge_count);
}

double spearman_rank(const std::vector<double>& x, const std::vector<double>& y) {
    check_same_size(x, y);
    return pearson(average_ranks(x), average_ranks(y));
}

std::vector<EdgeId> strong_edge_filter(const std::vector<double>& omega, double threshold) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < omega.size(); ++e) {
        if (omega[e] > threshold) out.push_back(e);
    }
    return out;
}

Histogram histogram(const std::vector<double>& values, std::size_t bins, bool log_bins) {
    if (bins < 1) throw ConfigError("bins must be >= 1");
    if (values.empty()) throw ConfigError("empty input");

    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (log_bins && lo <= 0.0) throw ConfigError("log bins need positive values");

    Histogram h;
    h.bin_edges.resize(bins + 1);
    if (hi == lo) {
        // Degenerate span: a single occupied bin.
        double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.5;
        for (std::size_t i = 0; i <= bins; ++i) {
            h.bin_edges[i] = lo - pad + 2.0 * pad * static_cast<double>(i) / static_cast<double>(bins);
        }
    } else if (log_bins) {
        double llo = std::log10(lo);
        double lhi = std::log10(hi);
        for (std::size_t i = 0; i <= bins; ++i) {
            h.bin_edges[i] = std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(bins));
        }
    } else {
        for (std::size_t i = 0; i <= bins; ++i) {
            h.bin_edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
        }
    }

    h.probabilities.assign(bins, 0.0);
    const double w = 1.0 / static_cast<double>(values.size());
    for (double v : values) {
        std::size_t b;
        if (v >= h.bin_edges[bins]) {
            b = bins - 1;
        } else {
            auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), v);
            b = (it == h.bin_edges.begin()) ? 0 : static_cast<std::size_t>(it - h.bin_edges.begin()) - 1;
            b = std::min(b, bins - 1);
        }
        h.probabilities[b] += w;
    }
    return h;
}

std::vector<RankPoint> rank_plot(const std::vector<double>& values) {
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<RankPoint> out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) out[i] = {i + 1, sorted[i]};
    return out;
}

double rank_plot_slope(const std::vector<RankPoint>& points) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (const auto& p : points) {
        if (p.value <= 0.0) continue;
        double x = std::log10(static_cast<double>(p.rank));
        double y = std::log10(p.value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw ConfigError("not enough points for a slope");
    double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) throw DegenerateError("degenerate rank plot");
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

RobustnessReport compare_runs(const std::vector<std::vector<double>>& omegas,
                              const std::vector<std::uint64_t>& run_seeds,
                              const std::vector<double>& taus,
                              std::size_t edge_count) {
    if (omegas.size() < 2) throw ConfigError("need at least 2 runs");

    RobustnessReport report;
    report.run_seeds = run_seeds;
    report.taus = taus;
    report.mean_jaccard.assign(taus.size(), 0.0);

    for (std::size_t a = 0; a < omegas.size(); ++a) {
        for (std::size_t b = a + 1; b < omegas.size(); ++b) {
            PairComparison pc;
            pc.run_a = a;
            pc.run_b = b;
            for (double tau : taus) {
                pc.jaccard.push_back(modified_jaccard(omegas[a], omegas[b], tau));
            }
            // Bit-identical vectors (and constant ones) would make the
            // correlation formulas divide by zero or report a vacuous 1;
            // flag them and report 1 by convention.
            if (omegas[a] == omegas[b]) {
                pc.pearson = 1.0;
                pc.pearson_degenerate = true;
                pc.spearman = 1.0;
                pc.spearman_degenerate = true;
            } else {
                try {
                    pc.pearson = pearson(omegas[a], omegas[b]);
                } catch (const DegenerateError&) {
                    pc.pearson = 1.0;
                    pc.pearson_degenerate = true;
                }
                try {
                    pc.spearman = spearman_rank(omegas[a], omegas[b]);
                } catch (const DegenerateError&) {
                    pc.spearman = 1.0;
                    pc.spearman_degenerate = true;
                }
            }
            pc.l2 = euclidean(omegas[a], omegas[b]);
            pc.avg_l2 = pc.l2 / static_cast<double>(edge_count);
            report.pairs.push_back(std::move(pc));
        }
    }

    const double np = static_cast<double>(report.pairs.size());
    for (const auto& pc : report.pairs) {
        for (std::size_t t = 0; t < taus.size(); ++t) report.mean_jaccard[t] += pc.jaccard[t] / np;
        report.mean_pearson += pc.pearson / np;
        report.mean_l2 += pc.l2 / np;
        report.mean_avg_l2 += pc.avg_l2 / np;
        report.mean_spearman += pc.spearman / np;
    }
    return report;
}

} // namespace kpath
