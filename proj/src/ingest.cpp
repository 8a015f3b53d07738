#include "kpath/ingest.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kpath/errors.hpp"

namespace kpath {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace

Graph parse_edge_list(std::string_view text, const IngestOptions& opts, ParseStats* stats) {
    std::vector<std::pair<std::string, std::string>> pairs;
    ParseStats local;

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        if (nl == std::string_view::npos && line.empty()) break;
        ++local.lines_read;

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0].front() == opts.comment_prefix) {
            ++local.comment_lines;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("malformed line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                             std::to_string(tokens.size()));
        }
        pairs.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    }

    Graph g = Graph::from_pairs(pairs);
    local.self_loops_dropped = g.build_stats().self_loops_dropped;
    local.duplicates_collapsed = g.build_stats().duplicates_collapsed;
    if (stats) *stats = local;
    return g;
}

Graph parse_edge_list_file(const std::string& path, const IngestOptions& opts, ParseStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str(), opts, stats);
}

std::string write_centrality_csv(const CentralityVector& vec, const Graph& g) {
    const std::size_t m = g.edge_count();
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0u);
    // Counts are the stored truth; same beta for every edge, so sorting by
    // count descending equals sorting by omega descending.
    std::stable_sort(order.begin(), order.end(), [&vec](EdgeId a, EdgeId b) {
        if (vec.counts[a] != vec.counts[b]) return vec.counts[a] > vec.counts[b];
        return a < b;
    });

    std::string out = "src,dst,count,omega\n";
    for (EdgeId e : order) {
        auto [u, v] = g.endpoints(e);
        out += g.label(u);
        out += ',';
        out += g.label(v);
        out += ',';
        out += std::to_string(vec.counts[e]);
        out += ',';
        out += format_sig12(vec.omega(e, m));
        out += '\n';
    }
    return out;
}

std::vector<CentralityRecord> read_centrality_csv(std::string_view text) {
    std::vector<CentralityRecord> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "src,dst,count,omega") throw ParseError("unexpected CSV header");
            continue;
        }
        std::vector<std::string> fields;
        std::size_t f = 0;
        while (true) {
            std::size_t c = line.find(',', f);
            fields.emplace_back(line.substr(f, c == std::string_view::npos ? line.size() - f : c - f));
            if (c == std::string_view::npos) break;
            f = c + 1;
        }
        if (fields.size() != 4) {
            throw ParseError("malformed CSV line " + std::to_string(line_no));
        }
        CentralityRecord rec;
        rec.src = fields[0];
        rec.dst = fields[1];
        try {
            rec.count = std::stoull(fields[2]);
            rec.omega = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw ParseError("malformed CSV line " + std::to_string(line_no));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace kpath
