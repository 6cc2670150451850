#include "fishnet/fishnet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/dtw.hpp"
#include "core/pipeline.hpp"

using namespace fishnet;

struct fishnet_config {
    PipelineConfig config;
};
struct fishnet_landings {
    std::vector<LandingRecord> records;
};
struct fishnet_series_set {
    SeriesSet set;
};
struct fishnet_distmat {
    DistanceMatrix matrix;
};
struct fishnet_network {
    Network net;
};
struct fishnet_partition {
    Partition partition;
};
struct fishnet_edge_diff {
    EdgeDiff diff;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// Runs the body, translating C++ exceptions into status codes and the
// thread-local error message.
template <typename Fn>
fishnet_status_t guarded(Fn&& fn) {
    try {
        fn();
        return FISHNET_OK;
    } catch (const IoError& e) {
        g_last_error = e.what();
        return FISHNET_ERROR_IO;
    } catch (const ValidationError& e) {
        g_last_error = e.what();
        return FISHNET_ERROR_INVALID;
    } catch (const InternalError& e) {
        g_last_error = e.what();
        return FISHNET_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FISHNET_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FISHNET_ERROR_INTERNAL;
    }
}

fishnet_status_t invalid(const char* message) {
    g_last_error = message;
    return FISHNET_ERROR_INVALID;
}

const std::set<EdgeKey>& diff_bucket(const EdgeDiff& diff, const char* which) {
    const std::string name = which ? which : "";
    if (name == "new") return diff.added;
    if (name == "retained") return diff.retained;
    if (name == "dropped") return diff.dropped;
    throw ValidationError("unknown diff bucket '" + name + "' (expected new, retained, dropped)");
}

}  // namespace

extern "C" {

const char* fishnet_version(void) {
    return "1.0.0";
}

const char* fishnet_last_error(void) {
    return g_last_error.c_str();
}

void fishnet_string_free(char* text) {
    std::free(text);
}

/* ---- configuration ------------------------------------------------- */

fishnet_status_t fishnet_config_create(fishnet_config_t** out) {
    if (!out) return invalid("fishnet_config_create: out is NULL");
    return guarded([&] { *out = new fishnet_config{}; });
}

fishnet_status_t fishnet_config_load(const char* path, fishnet_config_t** out) {
    if (!path || !out) return invalid("fishnet_config_load: NULL argument");
    return guarded([&] { *out = new fishnet_config{load_config(path)}; });
}

fishnet_status_t fishnet_config_set(fishnet_config_t* config, const char* key,
                                    const char* value) {
    if (!config || !key || !value) return invalid("fishnet_config_set: NULL argument");
    return guarded([&] { config_set(config->config, key, value); });
}

fishnet_status_t fishnet_config_get(const fishnet_config_t* config, const char* key,
                                    char** out_value) {
    if (!config || !key || !out_value) return invalid("fishnet_config_get: NULL argument");
    return guarded([&] { *out_value = copy_string(config_get(config->config, key)); });
}

void fishnet_config_free(fishnet_config_t* config) {
    delete config;
}

/* ---- landings ------------------------------------------------------ */

fishnet_status_t fishnet_generate_landings_csv(const char* path, int first_year, int last_year,
                                               uint64_t seed) {
    if (!path) return invalid("fishnet_generate_landings_csv: path is NULL");
    return guarded([&] {
        const auto records = generate_landings({first_year, last_year, seed});
        write_landings_csv(records, path);
    });
}

fishnet_status_t fishnet_landings_read_csv(const char* path, fishnet_landings_t** out) {
    if (!path || !out) return invalid("fishnet_landings_read_csv: NULL argument");
    return guarded([&] { *out = new fishnet_landings{parse_landings_csv(path)}; });
}

fishnet_status_t fishnet_landings_count(const fishnet_landings_t* landings, size_t* out_count) {
    if (!landings || !out_count) return invalid("fishnet_landings_count: NULL argument");
    *out_count = landings->records.size();
    return FISHNET_OK;
}

fishnet_status_t fishnet_landings_apply_config(const fishnet_landings_t* landings,
                                               const fishnet_config_t* config,
                                               fishnet_landings_t** out) {
    if (!landings || !config || !out) {
        return invalid("fishnet_landings_apply_config: NULL argument");
    }
    return guarded([&] {
        *out = new fishnet_landings{apply_exclusions(
            landings->records, config->config.exclusions, config->config.window())};
    });
}

fishnet_status_t fishnet_landings_summary_text(const fishnet_landings_t* landings,
                                               char** out_text) {
    if (!landings || !out_text) return invalid("fishnet_landings_summary_text: NULL argument");
    return guarded([&] { *out_text = copy_string(render_summary_text(landings->records)); });
}

void fishnet_landings_free(fishnet_landings_t* landings) {
    delete landings;
}

/* ---- series -------------------------------------------------------- */

fishnet_status_t fishnet_series_prepare(const fishnet_landings_t* landings,
                                        const fishnet_config_t* config,
                                        fishnet_series_set_t** out) {
    if (!landings || !config || !out) return invalid("fishnet_series_prepare: NULL argument");
    return guarded([&] {
        *out = new fishnet_series_set{prepare_series(landings->records, config->config)};
    });
}

fishnet_status_t fishnet_series_read_csv(const char* path, fishnet_series_set_t** out) {
    if (!path || !out) return invalid("fishnet_series_read_csv: NULL argument");
    return guarded([&] { *out = new fishnet_series_set{read_series_csv(path)}; });
}

fishnet_status_t fishnet_series_write_csv(const fishnet_series_set_t* set, const char* path) {
    if (!set || !path) return invalid("fishnet_series_write_csv: NULL argument");
    return guarded([&] { write_series_csv(set->set, path); });
}

fishnet_status_t fishnet_series_count(const fishnet_series_set_t* set, size_t* out_count) {
    if (!set || !out_count) return invalid("fishnet_series_count: NULL argument");
    *out_count = set->set.size();
    return FISHNET_OK;
}

fishnet_status_t fishnet_series_month_count(const fishnet_series_set_t* set, size_t* out_count) {
    if (!set || !out_count) return invalid("fishnet_series_month_count: NULL argument");
    *out_count = static_cast<size_t>(set->set.month_count());
    return FISHNET_OK;
}

fishnet_status_t fishnet_series_normalize(fishnet_series_set_t* set) {
    if (!set) return invalid("fishnet_series_normalize: set is NULL");
    return guarded([&] { set->set = normalize_set(set->set); });
}

fishnet_status_t fishnet_series_slice_year(const fishnet_series_set_t* set, int year,
                                           fishnet_series_set_t** out) {
    if (!set || !out) return invalid("fishnet_series_slice_year: NULL argument");
    return guarded([&] { *out = new fishnet_series_set{slice_year(set->set, year)}; });
}

void fishnet_series_free(fishnet_series_set_t* set) {
    delete set;
}

/* ---- distances ------------------------------------------------------ */

fishnet_status_t fishnet_dtw(const double* x, size_t x_len, const double* y, size_t y_len,
                             double* out_distance) {
    if (!x || !y || !out_distance) return invalid("fishnet_dtw: NULL argument");
    return guarded([&] { *out_distance = dtw({x, x_len}, {y, y_len}); });
}

fishnet_status_t fishnet_dtw_path(const double* x, size_t x_len, const double* y, size_t y_len,
                                  double* out_distance, size_t* out_path_i, size_t* out_path_j,
                                  size_t capacity, size_t* out_path_len) {
    if (!x || !y || !out_path_len) return invalid("fishnet_dtw_path: NULL argument");
    return guarded([&] {
        const auto [distance, path] = dtw_path({x, x_len}, {y, y_len});
        *out_path_len = path.steps.size();
        if (out_distance) *out_distance = distance;
        if (capacity == 0) return;
        if (!out_path_i || !out_path_j) {
            throw ValidationError("fishnet_dtw_path: NULL path buffers with nonzero capacity");
        }
        if (capacity < path.steps.size()) {
            throw ValidationError("fishnet_dtw_path: capacity " + std::to_string(capacity) +
                                  " below path length " + std::to_string(path.steps.size()));
        }
        for (size_t s = 0; s < path.steps.size(); ++s) {
            out_path_i[s] = path.steps[s].first;
            out_path_j[s] = path.steps[s].second;
        }
    });
}

fishnet_status_t fishnet_distance_matrix(const fishnet_series_set_t* set,
                                         fishnet_distmat_t** out) {
    if (!set || !out) return invalid("fishnet_distance_matrix: NULL argument");
    return guarded([&] { *out = new fishnet_distmat{distance_matrix(set->set)}; });
}

fishnet_status_t fishnet_distmat_normalize(const fishnet_distmat_t* matrix,
                                           fishnet_distmat_t** out) {
    if (!matrix || !out) return invalid("fishnet_distmat_normalize: NULL argument");
    return guarded([&] { *out = new fishnet_distmat{normalize_matrix(matrix->matrix)}; });
}

fishnet_status_t fishnet_distmat_size(const fishnet_distmat_t* matrix, size_t* out_size) {
    if (!matrix || !out_size) return invalid("fishnet_distmat_size: NULL argument");
    *out_size = matrix->matrix.size();
    return FISHNET_OK;
}

fishnet_status_t fishnet_distmat_get(const fishnet_distmat_t* matrix, size_t row, size_t col,
                                     double* out_value) {
    if (!matrix || !out_value) return invalid("fishnet_distmat_get: NULL argument");
    if (row >= matrix->matrix.size() || col >= matrix->matrix.size()) {
        return invalid("fishnet_distmat_get: index out of range");
    }
    *out_value = matrix->matrix.at(row, col);
    return FISHNET_OK;
}

fishnet_status_t fishnet_distmat_write_csv(const fishnet_distmat_t* matrix, const char* path) {
    if (!matrix || !path) return invalid("fishnet_distmat_write_csv: NULL argument");
    return guarded([&] { write_distance_csv(matrix->matrix, path); });
}

void fishnet_distmat_free(fishnet_distmat_t* matrix) {
    delete matrix;
}

/* ---- network construction ------------------------------------------ */

fishnet_status_t fishnet_network_knn(const fishnet_distmat_t* matrix, size_t k,
                                     fishnet_network_t** out) {
    if (!matrix || !out) return invalid("fishnet_network_knn: NULL argument");
    return guarded([&] { *out = new fishnet_network{knn_network(matrix->matrix, k)}; });
}

fishnet_status_t fishnet_network_eps(const fishnet_distmat_t* matrix, double eps,
                                     fishnet_network_t** out) {
    if (!matrix || !out) return invalid("fishnet_network_eps: NULL argument");
    return guarded([&] { *out = new fishnet_network{eps_network(matrix->matrix, eps)}; });
}

fishnet_status_t fishnet_network_weighted(const fishnet_distmat_t* matrix,
                                          fishnet_network_t** out) {
    if (!matrix || !out) return invalid("fishnet_network_weighted: NULL argument");
    return guarded([&] { *out = new fishnet_network{weighted_network(matrix->matrix)}; });
}

fishnet_status_t fishnet_network_significant(const fishnet_series_set_t* set, double alpha,
                                             int bonferroni, fishnet_network_t** out) {
    if (!set || !out) return invalid("fishnet_network_significant: NULL argument");
    return guarded([&] {
        *out = new fishnet_network{significant_links_network(set->set, alpha, bonferroni != 0)};
    });
}

fishnet_status_t fishnet_network_read_edgelist(const char* path, fishnet_network_t** out) {
    if (!path || !out) return invalid("fishnet_network_read_edgelist: NULL argument");
    return guarded([&] { *out = new fishnet_network{read_edgelist_csv(path)}; });
}

fishnet_status_t fishnet_network_node_count(const fishnet_network_t* net, size_t* out_count) {
    if (!net || !out_count) return invalid("fishnet_network_node_count: NULL argument");
    *out_count = net->net.node_count();
    return FISHNET_OK;
}

fishnet_status_t fishnet_network_edge_count(const fishnet_network_t* net, size_t* out_count) {
    if (!net || !out_count) return invalid("fishnet_network_edge_count: NULL argument");
    *out_count = net->net.edge_count();
    return FISHNET_OK;
}

fishnet_status_t fishnet_network_node_label(const fishnet_network_t* net, size_t index,
                                            char** out_label) {
    if (!net || !out_label) return invalid("fishnet_network_node_label: NULL argument");
    if (index >= net->net.node_count()) {
        return invalid("fishnet_network_node_label: index out of range");
    }
    return guarded([&] { *out_label = copy_string(net->net.node(index).label); });
}

fishnet_status_t fishnet_network_density(const fishnet_network_t* net, double* out_density) {
    if (!net || !out_density) return invalid("fishnet_network_density: NULL argument");
    return guarded([&] { *out_density = density(net->net); });
}

fishnet_status_t fishnet_network_degree(const fishnet_network_t* net, const char* label,
                                        size_t* out_degree) {
    if (!net || !label || !out_degree) return invalid("fishnet_network_degree: NULL argument");
    return guarded([&] { *out_degree = degree(net->net, label); });
}

fishnet_status_t fishnet_network_local_clustering(const fishnet_network_t* net,
                                                  const char* label, double* out_coefficient) {
    if (!net || !label || !out_coefficient) {
        return invalid("fishnet_network_local_clustering: NULL argument");
    }
    return guarded([&] { *out_coefficient = local_clustering(net->net, label); });
}

fishnet_status_t fishnet_network_top_degrees_text(const fishnet_network_t* net, size_t count,
                                                  char** out_text) {
    if (!net || !out_text) return invalid("fishnet_network_top_degrees_text: NULL argument");
    return guarded([&] {
        std::string text;
        for (const auto& [node, deg] : top_degree_nodes(net->net, count)) {
            text += node.label + ": " + std::to_string(deg) + "\n";
        }
        *out_text = copy_string(text);
    });
}

fishnet_status_t fishnet_network_write(const fishnet_network_t* net, const char* format,
                                       const char* path, const fishnet_partition_t* partition,
                                       const fishnet_edge_diff_t* diff) {
    if (!net || !format || !path) return invalid("fishnet_network_write: NULL argument");
    return guarded([&] {
        write_network(net->net, format, path, partition ? &partition->partition : nullptr,
                      diff ? &diff->diff : nullptr);
    });
}

void fishnet_network_free(fishnet_network_t* net) {
    delete net;
}

/* ---- communities and metrics --------------------------------------- */

fishnet_status_t fishnet_detect_communities(const fishnet_network_t* net, size_t walk_length,
                                            fishnet_partition_t** out) {
    if (!net || !out) return invalid("fishnet_detect_communities: NULL argument");
    return guarded([&] {
        *out = new fishnet_partition{detect_communities(net->net, walk_length)};
    });
}

fishnet_status_t fishnet_partition_community_count(const fishnet_partition_t* partition,
                                                   size_t* out_count) {
    if (!partition || !out_count) {
        return invalid("fishnet_partition_community_count: NULL argument");
    }
    *out_count = static_cast<size_t>(partition->partition.community_count());
    return FISHNET_OK;
}

fishnet_status_t fishnet_partition_of(const fishnet_partition_t* partition, const char* label,
                                      int* out_community) {
    if (!partition || !label || !out_community) {
        return invalid("fishnet_partition_of: NULL argument");
    }
    return guarded([&] { *out_community = partition->partition.community_of(label); });
}

fishnet_status_t fishnet_partition_modularity(const fishnet_partition_t* partition,
                                              double* out_modularity) {
    if (!partition || !out_modularity) {
        return invalid("fishnet_partition_modularity: NULL argument");
    }
    if (!partition->partition.modularity) {
        return invalid("modularity undefined: the partitioned network has no edges");
    }
    *out_modularity = *partition->partition.modularity;
    return FISHNET_OK;
}

void fishnet_partition_free(fishnet_partition_t* partition) {
    delete partition;
}

fishnet_status_t fishnet_modularity(const fishnet_network_t* net, const int* communities,
                                    size_t count, double* out_modularity) {
    if (!net || !communities || !out_modularity) {
        return invalid("fishnet_modularity: NULL argument");
    }
    return guarded([&] {
        const std::vector<int> assignment(communities, communities + count);
        *out_modularity = modularity(net->net, assignment);
    });
}

/* ---- year-over-year churn ------------------------------------------ */

fishnet_status_t fishnet_edge_diff(const fishnet_network_t* prev, const fishnet_network_t* curr,
                                   fishnet_edge_diff_t** out) {
    if (!prev || !curr || !out) return invalid("fishnet_edge_diff: NULL argument");
    return guarded([&] { *out = new fishnet_edge_diff_t{edge_diff(prev->net, curr->net)}; });
}

fishnet_status_t fishnet_edge_diff_count(const fishnet_edge_diff_t* diff, const char* which,
                                         size_t* out_count) {
    if (!diff || !which || !out_count) return invalid("fishnet_edge_diff_count: NULL argument");
    return guarded([&] { *out_count = diff_bucket(diff->diff, which).size(); });
}

fishnet_status_t fishnet_edge_diff_edge(const fishnet_edge_diff_t* diff, const char* which,
                                        size_t index, char** out_source, char** out_target) {
    if (!diff || !which || !out_source || !out_target) {
        return invalid("fishnet_edge_diff_edge: NULL argument");
    }
    return guarded([&] {
        const auto& bucket = diff_bucket(diff->diff, which);
        if (index >= bucket.size()) {
            throw ValidationError("fishnet_edge_diff_edge: index out of range");
        }
        auto it = bucket.begin();
        std::advance(it, static_cast<long>(index));
        *out_source = copy_string(it->a);
        *out_target = copy_string(it->b);
    });
}

void fishnet_edge_diff_free(fishnet_edge_diff_t* diff) {
    delete diff;
}

/* ---- pipeline stages ------------------------------------------------ */

fishnet_status_t fishnet_run_prepare(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_prepare: config is NULL");
    return guarded([&] { run_prepare(config->config); });
}

fishnet_status_t fishnet_run_distances(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_distances: config is NULL");
    return guarded([&] { run_distances(config->config); });
}

fishnet_status_t fishnet_run_build(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_build: config is NULL");
    return guarded([&] { run_build(config->config); });
}

fishnet_status_t fishnet_run_analyze(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_analyze: config is NULL");
    return guarded([&] { run_analyze(config->config); });
}

fishnet_status_t fishnet_run_sweep(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_sweep: config is NULL");
    return guarded([&] { run_sweep(config->config); });
}

fishnet_status_t fishnet_run_pipeline(const fishnet_config_t* config) {
    if (!config) return invalid("fishnet_run_pipeline: config is NULL");
    return guarded([&] { run_pipeline(config->config); });
}

fishnet_status_t fishnet_run_summary(const fishnet_config_t* config, char** out_text) {
    if (!config || !out_text) return invalid("fishnet_run_summary: NULL argument");
    return guarded([&] { *out_text = copy_string(run_summary(config->config)); });
}

fishnet_status_t fishnet_diff_files(const char* prev_path, const char* curr_path,
                                    char** out_text) {
    if (!prev_path || !curr_path || !out_text) {
        return invalid("fishnet_diff_files: NULL argument");
    }
    return guarded([&] { *out_text = copy_string(diff_files_text(prev_path, curr_path)); });
}

}  // extern "C"
