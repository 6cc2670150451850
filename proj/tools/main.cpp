// fishnet command line: landings CSV in, yearly networks and reports out.
// Every subcommand drives the shared library through its C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fishnet/fishnet.h"

namespace {

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> sets;  // key=value overrides, applied in order
    std::string input;
    std::string output_dir;
    std::string method;
    std::string k;
    std::string eps;
    std::string alpha;
    std::string years;
    std::string seed;
};

void attach_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value lines)");
    cmd->add_option("--set", opts.sets, "Override any config key, as key=value")
        ->type_name("KEY=VALUE");
    cmd->add_option("--input", opts.input, "Landings CSV path");
    cmd->add_option("--output-dir", opts.output_dir, "Directory for generated files");
    cmd->add_option("--method", opts.method, "knn | eps | weighted | significant");
    cmd->add_option("--k", opts.k, "Neighbor count for knn");
    cmd->add_option("--eps", opts.eps, "Distance threshold for eps");
    cmd->add_option("--alpha", opts.alpha, "Significance level");
    cmd->add_option("--years", opts.years, "Year range, e.g. 2010..2017");
    cmd->add_option("--seed", opts.seed, "Generator seed");
}

int exit_code(fishnet_status_t status) {
    switch (status) {
        case FISHNET_OK: return 0;
        case FISHNET_ERROR_INVALID:
        case FISHNET_ERROR_IO: return 1;
        default: return 2;
    }
}

int fail(fishnet_status_t status) {
    std::fprintf(stderr, "fishnet: error: %s\n", fishnet_last_error());
    return exit_code(status);
}

// Builds the config handle from --config plus the overrides.
fishnet_status_t make_config(const CommonOptions& opts, fishnet_config_t** out) {
    fishnet_status_t status = opts.config_path.empty()
                                  ? fishnet_config_create(out)
                                  : fishnet_config_load(opts.config_path.c_str(), out);
    if (status != FISHNET_OK) return status;

    const auto set = [&](const char* key, const std::string& value) {
        if (status == FISHNET_OK && !value.empty()) {
            status = fishnet_config_set(*out, key, value.c_str());
        }
    };
    set("input", opts.input);
    set("output_dir", opts.output_dir);
    set("method", opts.method);
    set("k", opts.k);
    set("eps", opts.eps);
    set("alpha", opts.alpha);
    set("years", opts.years);
    set("seed", opts.seed);

    for (const auto& pair : opts.sets) {
        if (status != FISHNET_OK) break;
        const auto eq = pair.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "fishnet: error: --set expects key=value, got '%s'\n",
                         pair.c_str());
            fishnet_config_free(*out);
            *out = nullptr;
            return FISHNET_ERROR_INVALID;
        }
        status = fishnet_config_set(*out, pair.substr(0, eq).c_str(),
                                    pair.substr(eq + 1).c_str());
    }
    if (status != FISHNET_OK) {
        fishnet_config_free(*out);
        *out = nullptr;
    }
    return status;
}

int run_with_config(const CommonOptions& opts, fishnet_status_t (*stage)(const fishnet_config_t*),
                    const char* done_message) {
    fishnet_config_t* config = nullptr;
    fishnet_status_t status = make_config(opts, &config);
    if (status != FISHNET_OK) return fail(status);

    status = stage(config);
    if (status == FISHNET_OK && done_message) {
        char* dir = nullptr;
        if (fishnet_config_get(config, "output_dir", &dir) == FISHNET_OK) {
            std::printf("%s %s\n", done_message, dir);
            fishnet_string_free(dir);
        }
    }
    fishnet_config_free(config);
    return status == FISHNET_OK ? 0 : fail(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time series network analysis for fisheries landings"};
    app.set_version_flag("--version", fishnet_version());
    app.require_subcommand(1);

    CommonOptions generate_opts, prepare_opts, distances_opts, build_opts, analyze_opts,
        sweep_opts, pipeline_opts, summary_opts, diff_opts;

    auto* generate = app.add_subcommand(
        "generate", "Write a synthetic landings CSV with three planted label groups");
    std::string generate_out = "landings.csv";
    generate->add_option("--out", generate_out, "Output CSV path");
    attach_common(generate, generate_opts);

    auto* prepare = app.add_subcommand(
        "prepare", "Parse, exclude, aggregate and impute; writes series.csv");
    attach_common(prepare, prepare_opts);

    auto* distances = app.add_subcommand(
        "distances", "Write one DTW distance matrix CSV per year");
    attach_common(distances, distances_opts);

    auto* build = app.add_subcommand(
        "build", "Build and export the yearly networks for the configured method");
    attach_common(build, build_opts);

    auto* analyze = app.add_subcommand(
        "analyze", "Metrics, communities, churn and top degrees; writes report.json");
    attach_common(analyze, analyze_opts);

    auto* sweep = app.add_subcommand(
        "sweep", "Mean modularity and density for every candidate method; writes sweep.csv");
    attach_common(sweep, sweep_opts);

    auto* pipeline = app.add_subcommand(
        "pipeline", "Everything: prepare, build, exports, report (and sweep when enabled)");
    attach_common(pipeline, pipeline_opts);

    auto* summary = app.add_subcommand(
        "summary", "Landings counts and weight totals by classification and metier");
    attach_common(summary, summary_opts);

    auto* diff = app.add_subcommand("diff", "Edge churn between two exported edge lists");
    std::string diff_prev, diff_curr;
    diff->add_option("--prev", diff_prev, "Earlier edge-list CSV")->required();
    diff->add_option("--curr", diff_curr, "Later edge-list CSV")->required();
    attach_common(diff, diff_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*generate) {
        fishnet_config_t* config = nullptr;
        fishnet_status_t status = make_config(generate_opts, &config);
        if (status != FISHNET_OK) return fail(status);

        // Year range and seed come from the config so --years/--seed work.
        char* years = nullptr;
        char* seed_text = nullptr;
        int first = 2010, last = 2017;
        unsigned long long seed = 42;
        if (fishnet_config_get(config, "years", &years) == FISHNET_OK) {
            std::sscanf(years, "%d..%d", &first, &last);
            fishnet_string_free(years);
        }
        if (fishnet_config_get(config, "seed", &seed_text) == FISHNET_OK) {
            std::sscanf(seed_text, "%llu", &seed);
            fishnet_string_free(seed_text);
        }
        fishnet_config_free(config);

        status = fishnet_generate_landings_csv(generate_out.c_str(), first, last, seed);
        if (status != FISHNET_OK) return fail(status);
        std::printf("wrote %s\n", generate_out.c_str());
        return 0;
    }
    if (*prepare) {
        return run_with_config(prepare_opts, fishnet_run_prepare, "wrote series.csv under");
    }
    if (*distances) {
        return run_with_config(distances_opts, fishnet_run_distances,
                               "wrote distance matrices under");
    }
    if (*build) {
        return run_with_config(build_opts, fishnet_run_build, "wrote networks under");
    }
    if (*analyze) {
        return run_with_config(analyze_opts, fishnet_run_analyze, "wrote report.json under");
    }
    if (*sweep) {
        return run_with_config(sweep_opts, fishnet_run_sweep, "wrote sweep.csv under");
    }
    if (*pipeline) {
        return run_with_config(pipeline_opts, fishnet_run_pipeline, "wrote pipeline outputs under");
    }
    if (*summary) {
        fishnet_config_t* config = nullptr;
        fishnet_status_t status = make_config(summary_opts, &config);
        if (status != FISHNET_OK) return fail(status);
        char* text = nullptr;
        status = fishnet_run_summary(config, &text);
        fishnet_config_free(config);
        if (status != FISHNET_OK) return fail(status);
        std::printf("%s", text);
        fishnet_string_free(text);
        return 0;
    }
    if (*diff) {
        char* text = nullptr;
        const fishnet_status_t status =
            fishnet_diff_files(diff_prev.c_str(), diff_curr.c_str(), &text);
        if (status != FISHNET_OK) return fail(status);
        std::printf("%s", text);
        fishnet_string_free(text);
        return 0;
    }
    return 1;
}
