/*
 * fishnet: landings time series to yearly complex networks.
 *
 * C API of the shared library. Every object is an opaque handle created by
 * a fishnet_* constructor and released by its matching *_free; every
 * function returns a fishnet_status_t, with results written through out
 * parameters. On failure, fishnet_last_error() describes what went wrong
 * for the calling thread. Returned strings are malloc'd copies owned by the
 * caller; release them with fishnet_string_free.
 */

#ifndef FISHNET_H
#define FISHNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fishnet_status {
    FISHNET_OK = 0,
    FISHNET_ERROR_INVALID = 1,  /* bad arguments, malformed data, violated contract */
    FISHNET_ERROR_IO = 2,       /* unreadable or unwritable file */
    FISHNET_ERROR_INTERNAL = 3  /* broken internal invariant: a bug */
} fishnet_status_t;

typedef struct fishnet_config fishnet_config_t;
typedef struct fishnet_landings fishnet_landings_t;
typedef struct fishnet_series_set fishnet_series_set_t;
typedef struct fishnet_distmat fishnet_distmat_t;
typedef struct fishnet_network fishnet_network_t;
typedef struct fishnet_partition fishnet_partition_t;
typedef struct fishnet_edge_diff fishnet_edge_diff_t;

const char* fishnet_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* fishnet_last_error(void);

void fishnet_string_free(char* text);

/* ---- configuration ------------------------------------------------- */

fishnet_status_t fishnet_config_create(fishnet_config_t** out);
fishnet_status_t fishnet_config_load(const char* path, fishnet_config_t** out);
fishnet_status_t fishnet_config_set(fishnet_config_t* config, const char* key,
                                    const char* value);
fishnet_status_t fishnet_config_get(const fishnet_config_t* config, const char* key,
                                    char** out_value);
void fishnet_config_free(fishnet_config_t* config);

/* ---- landings ------------------------------------------------------ */

/* Writes a synthetic landings CSV with three planted label groups. */
fishnet_status_t fishnet_generate_landings_csv(const char* path, int first_year, int last_year,
                                               uint64_t seed);

fishnet_status_t fishnet_landings_read_csv(const char* path, fishnet_landings_t** out);
fishnet_status_t fishnet_landings_count(const fishnet_landings_t* landings, size_t* out_count);

/* Study window plus exclusion lists from the config, record-wise. */
fishnet_status_t fishnet_landings_apply_config(const fishnet_landings_t* landings,
                                               const fishnet_config_t* config,
                                               fishnet_landings_t** out);
fishnet_status_t fishnet_landings_summary_text(const fishnet_landings_t* landings,
                                               char** out_text);
void fishnet_landings_free(fishnet_landings_t* landings);

/* ---- series -------------------------------------------------------- */

/* Full preparation: exclusions, per-kind monthly aggregation, gap
 * imputation and missing-month policy, all per the config. */
fishnet_status_t fishnet_series_prepare(const fishnet_landings_t* landings,
                                        const fishnet_config_t* config,
                                        fishnet_series_set_t** out);
fishnet_status_t fishnet_series_read_csv(const char* path, fishnet_series_set_t** out);
fishnet_status_t fishnet_series_write_csv(const fishnet_series_set_t* set, const char* path);
fishnet_status_t fishnet_series_count(const fishnet_series_set_t* set, size_t* out_count);
fishnet_status_t fishnet_series_month_count(const fishnet_series_set_t* set, size_t* out_count);
/* Min-max normalization of every series over the full span, in place. */
fishnet_status_t fishnet_series_normalize(fishnet_series_set_t* set);
fishnet_status_t fishnet_series_slice_year(const fishnet_series_set_t* set, int year,
                                           fishnet_series_set_t** out);
void fishnet_series_free(fishnet_series_set_t* set);

/* ---- distances ------------------------------------------------------ */

/* Dynamic time warping distance between two sequences. */
fishnet_status_t fishnet_dtw(const double* x, size_t x_len, const double* y, size_t y_len,
                             double* out_distance);

/* Optimal warping path. Call with capacity 0 to query the length, then with
 * index buffers of at least that capacity; indices are 1-based. */
fishnet_status_t fishnet_dtw_path(const double* x, size_t x_len, const double* y, size_t y_len,
                                  double* out_distance, size_t* out_path_i, size_t* out_path_j,
                                  size_t capacity, size_t* out_path_len);

fishnet_status_t fishnet_distance_matrix(const fishnet_series_set_t* set,
                                         fishnet_distmat_t** out);
fishnet_status_t fishnet_distmat_normalize(const fishnet_distmat_t* matrix,
                                           fishnet_distmat_t** out);
fishnet_status_t fishnet_distmat_size(const fishnet_distmat_t* matrix, size_t* out_size);
fishnet_status_t fishnet_distmat_get(const fishnet_distmat_t* matrix, size_t row, size_t col,
                                     double* out_value);
fishnet_status_t fishnet_distmat_write_csv(const fishnet_distmat_t* matrix, const char* path);
void fishnet_distmat_free(fishnet_distmat_t* matrix);

/* ---- network construction ------------------------------------------ */

fishnet_status_t fishnet_network_knn(const fishnet_distmat_t* matrix, size_t k,
                                     fishnet_network_t** out);
fishnet_status_t fishnet_network_eps(const fishnet_distmat_t* matrix, double eps,
                                     fishnet_network_t** out);
fishnet_status_t fishnet_network_weighted(const fishnet_distmat_t* matrix,
                                          fishnet_network_t** out);
fishnet_status_t fishnet_network_significant(const fishnet_series_set_t* set, double alpha,
                                             int bonferroni, fishnet_network_t** out);
fishnet_status_t fishnet_network_read_edgelist(const char* path, fishnet_network_t** out);

fishnet_status_t fishnet_network_node_count(const fishnet_network_t* net, size_t* out_count);
fishnet_status_t fishnet_network_edge_count(const fishnet_network_t* net, size_t* out_count);
fishnet_status_t fishnet_network_node_label(const fishnet_network_t* net, size_t index,
                                            char** out_label);
fishnet_status_t fishnet_network_density(const fishnet_network_t* net, double* out_density);
fishnet_status_t fishnet_network_degree(const fishnet_network_t* net, const char* label,
                                        size_t* out_degree);
fishnet_status_t fishnet_network_local_clustering(const fishnet_network_t* net,
                                                  const char* label, double* out_coefficient);
fishnet_status_t fishnet_network_top_degrees_text(const fishnet_network_t* net, size_t count,
                                                  char** out_text);

/* format: "edgelist" | "graphml" | "dot". Partition and diff decorate the
 * export when given; either may be NULL. */
fishnet_status_t fishnet_network_write(const fishnet_network_t* net, const char* format,
                                       const char* path, const fishnet_partition_t* partition,
                                       const fishnet_edge_diff_t* diff);
void fishnet_network_free(fishnet_network_t* net);

/* ---- communities and metrics --------------------------------------- */

fishnet_status_t fishnet_detect_communities(const fishnet_network_t* net, size_t walk_length,
                                            fishnet_partition_t** out);
fishnet_status_t fishnet_partition_community_count(const fishnet_partition_t* partition,
                                                   size_t* out_count);
fishnet_status_t fishnet_partition_of(const fishnet_partition_t* partition, const char* label,
                                      int* out_community);
/* Fails with FISHNET_ERROR_INVALID when modularity is undefined (edgeless). */
fishnet_status_t fishnet_partition_modularity(const fishnet_partition_t* partition,
                                              double* out_modularity);
void fishnet_partition_free(fishnet_partition_t* partition);

/* Modularity of an arbitrary assignment, one community id per node index. */
fishnet_status_t fishnet_modularity(const fishnet_network_t* net, const int* communities,
                                    size_t count, double* out_modularity);

/* ---- year-over-year churn ------------------------------------------ */

fishnet_status_t fishnet_edge_diff(const fishnet_network_t* prev, const fishnet_network_t* curr,
                                   fishnet_edge_diff_t** out);
/* which: "new" | "retained" | "dropped". */
fishnet_status_t fishnet_edge_diff_count(const fishnet_edge_diff_t* diff, const char* which,
                                         size_t* out_count);
fishnet_status_t fishnet_edge_diff_edge(const fishnet_edge_diff_t* diff, const char* which,
                                        size_t index, char** out_source, char** out_target);
void fishnet_edge_diff_free(fishnet_edge_diff_t* diff);

/* ---- pipeline stages ------------------------------------------------ */

/* Each runs one CLI stage against the config, writing files under the
 * configured output directory. */
fishnet_status_t fishnet_run_prepare(const fishnet_config_t* config);
fishnet_status_t fishnet_run_distances(const fishnet_config_t* config);
fishnet_status_t fishnet_run_build(const fishnet_config_t* config);
fishnet_status_t fishnet_run_analyze(const fishnet_config_t* config);
fishnet_status_t fishnet_run_sweep(const fishnet_config_t* config);
fishnet_status_t fishnet_run_pipeline(const fishnet_config_t* config);
fishnet_status_t fishnet_run_summary(const fishnet_config_t* config, char** out_text);

/* Churn between two exported edge lists, rendered as text. */
fishnet_status_t fishnet_diff_files(const char* prev_path, const char* curr_path,
                                    char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* FISHNET_H */
