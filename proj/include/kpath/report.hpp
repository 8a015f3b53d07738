#pragma once

#include <string>

#include "kpath/experiments.hpp"
#include "kpath/graph.hpp"
#include "kpath/ingest.hpp"
#include "kpath/metrics.hpp"
#include "kpath/oracle.hpp"
#include "kpath/walk.hpp"

namespace kpath {

// JSON writers. Field order is fixed (insertion order), formatting is
// deterministic, and nothing time-dependent goes into report payloads, so
// identical inputs serialize to identical bytes.

std::string write_run_summary_json(const CentralityVector& vec, const Graph& g,
                                   bool include_elapsed);
std::string write_robustness_json(const RobustnessReport& report);
std::string write_oracle_json(const OracleComparison& cmp, const Graph& g);
std::string write_bench_json(const BenchReport& report);
std::string write_stats_json(const StatsReport& report);

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

} // namespace kpath
