#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/walk.hpp"

namespace kpath {

struct IngestOptions {
    char comment_prefix = '#';
    // Data lines are split on runs of whitespace and must yield exactly
    // two tokens.
};

struct ParseStats {
    std::size_t lines_read = 0;
    std::size_t comment_lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

// SNAP-style edge list: '#' comments, whitespace-delimited label pairs.
// Throws ParseError with the offending line number on malformed lines,
// ConfigError("empty graph") when nothing survives cleaning.
Graph parse_edge_list(std::string_view text, const IngestOptions& opts = {},
                      ParseStats* stats = nullptr);

Graph parse_edge_list_file(const std::string& path, const IngestOptions& opts = {},
                           ParseStats* stats = nullptr);

// One row per edge: src,dst,count,omega. Sorted by descending omega,
// EdgeId breaking ties; omega printed with 12 significant digits.
std::string write_centrality_csv(const CentralityVector& vec, const Graph& g);

struct CentralityRecord {
    std::string src;
    std::string dst;
    std::uint64_t count = 0;
    double omega = 0.0;
};

std::vector<CentralityRecord> read_centrality_csv(std::string_view text);

} // namespace kpath
