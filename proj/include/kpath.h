/*
 * C API for the kpath edge-centrality library.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return kp_status; on failure kp_last_error() holds a thread-local
 * message describing what went wrong. Strings returned through char**
 * outputs are owned by the caller and released with kp_string_free().
 */
#ifndef KPATH_H
#define KPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kp_graph kp_graph;
typedef struct kp_result kp_result;

typedef int kp_status;
/* Status values double as CLI exit codes. */
#define KP_OK 0
#define KP_ERR_PARSE 2
#define KP_ERR_CONFIG 3
#define KP_ERR_RUNTIME 4

#define KP_VARIANT_ERW 0
#define KP_VARIANT_WERW 1

/* Message for the last failure on this thread; empty string if none. */
const char* kp_last_error(void);

void kp_string_free(char* s);

/* --- graphs ------------------------------------------------------------ */

/* SNAP-style edge list: '#' comments, two whitespace-separated labels per
 * line. Self-loops are dropped; duplicate and reciprocal pairs collapse to
 * one undirected edge. */
kp_status kp_graph_from_file(const char* path, kp_graph** out);
kp_status kp_graph_from_string(const char* text, kp_graph** out);

/* Uniform random simple graph, deterministic in the seed. */
kp_status kp_graph_random(uint64_t nodes, uint64_t edges, uint64_t seed, kp_graph** out);

void kp_graph_free(kp_graph* g);
uint64_t kp_graph_node_count(const kp_graph* g);
uint64_t kp_graph_edge_count(const kp_graph* g);

/* --- runs -------------------------------------------------------------- */

typedef struct {
    int variant;   /* KP_VARIANT_ERW or KP_VARIANT_WERW */
    int32_t kappa; /* walk length bound, >= 1 */
    int64_t rho;   /* iterations; negative selects the default |E| - 1 */
    double beta;   /* traversal bonus; <= 0 selects the default 1 / |E| */
    uint64_t seed;
} kp_config;

/* Defaults: WERW, kappa 20, rho and beta derived from the graph, seed 0. */
void kp_config_init(kp_config* cfg);

kp_status kp_run(const kp_graph* g, const kp_config* cfg, kp_result** out);
void kp_result_free(kp_result* r);

double kp_result_elapsed_seconds(const kp_result* r);
uint64_t kp_result_count(const kp_result* r, uint64_t edge);
double kp_result_omega(const kp_result* r, uint64_t edge);

/* src,dst,count,omega rows sorted by descending omega. */
kp_status kp_result_to_csv(const kp_result* r, const kp_graph* g, char** out);

/* Config echo, graph sizes and fingerprint; include_elapsed adds the
 * wall-clock field (excluded from reproducible artifacts). */
kp_status kp_result_summary_json(const kp_result* r, const kp_graph* g,
                                 int include_elapsed, char** out);

/* --- experiments ------------------------------------------------------- */

/* `runs` independent runs (seeds cfg->seed + i, or explicit `seeds` of
 * length `runs`), all pairwise comparison metrics as JSON. */
kp_status kp_robustness_json(const kp_graph* g, const kp_config* cfg, int runs,
                             const double* taus, int n_taus, int jobs,
                             const uint64_t* seeds, char** out);

/* Exact probability-tree oracle plus a Monte-Carlo cross-check over
 * mc_runs runs. Only small instances: |V| <= 12 and kappa <= 6. */
kp_status kp_oracle_json(const kp_graph* g, const kp_config* cfg, uint64_t mc_runs,
                         int jobs, char** out);

/* Timing grid over synthetic graphs (|V| = |E| / 8) with doubling
 * ratios. */
kp_status kp_bench_json(const uint64_t* edge_sizes, int n_sizes, const int32_t* kappas,
                        int n_kappas, uint64_t seed, int variant, char** out);

/* Distribution stats of a centrality CSV; optional second CSV over the
 * same edge set adds a cross-ranking Spearman. log_bins expects strictly
 * positive values. */
kp_status kp_stats_json(const char* csv_text, const char* other_csv_or_null, int bins,
                        int log_bins, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KPATH_H */
