#pragma once

#include "luem/graph.hpp"
#include "luem/select.hpp"

#include <json.hpp>

#include <string>

namespace luem {

// Everything a `select` run needs; echoed verbatim into the report so a
// run can be replayed from its output.
struct RunConfig {
    std::string graph_path;
    std::string algo = "era";  // ba | era | fca | degree | cc | ac | oracle
    std::uint32_t k = 1;
    std::uint32_t r = 1;
    std::uint32_t b = 1;
    std::uint32_t precision = 7;     // fca only
    std::uint64_t hash_seed = 0;     // fca only
    std::string output = "json";     // json | csv
    int threads = 1;
    std::uint64_t oracle_cap = 2'000'000;
};

struct RunReport {
    RunConfig config;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
    std::vector<label_t> seeds;  // original labels
    std::vector<std::uint32_t> marginal_gains;
    std::vector<std::uint32_t> engaged_per_iteration;  // cumulative
    std::uint32_t total_engaged = 0;
    std::size_t seg_evaluations = 0;
    double load_seconds = 0.0;
    double init_seconds = 0.0;
    double select_seconds = 0.0;

    nlohmann::json to_json() const;
    std::string to_csv() const;  // header line + one data row
    std::string render() const;  // per config.output
};

void validate_config(const RunConfig& config, bool precision_given, bool hash_seed_given);

/// Runs the configured selector on an already loaded graph.
RunReport run_select(const Graph& g, const LoadResult& load, const RunConfig& config);

/// Loads config.graph_path and runs.
RunReport run_select(const RunConfig& config);

SelectionResult dispatch_selector(const Graph& g, const RunConfig& config);

/// Writes "dense_id<TAB>label" lines.
void dump_mapping(const Graph& g, std::ostream& out);

}  // namespace luem
