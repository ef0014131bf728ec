#include "luem/run.hpp"

#include "luem/hyperanf.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace luem {

namespace {

std::string join(const auto& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ';';
        out << values[i];
    }
    return out.str();
}

}  // namespace

void validate_config(const RunConfig& config, bool precision_given, bool hash_seed_given) {
    static const char* algos[] = {"ba", "era", "fca", "degree", "cc", "ac", "oracle"};
    bool known = false;
    for (const char* a : algos) known |= config.algo == a;
    if (!known) throw std::invalid_argument("unknown algorithm: " + config.algo);
    if (config.k < 1 || config.r < 1 || config.b < 1)
        throw std::invalid_argument("k, r and b must be positive");
    if (config.algo != "fca" && (precision_given || hash_seed_given))
        throw std::invalid_argument("--precision and --hash-seed apply to --algo fca only");
    if (config.output != "json" && config.output != "csv")
        throw std::invalid_argument("output must be json or csv");
    if (config.threads < 1) throw std::invalid_argument("threads must be positive");
}

SelectionResult dispatch_selector(const Graph& g, const RunConfig& config) {
    if (config.algo == "ba") return select_ba(g, config.k, config.r, config.b, config.threads);
    if (config.algo == "era") return select_era(g, config.k, config.r, config.b);
    if (config.algo == "fca")
        return select_fca(g, config.k, config.r, config.b, config.precision, config.hash_seed,
                          config.threads);
    if (config.algo == "degree")
        return select_baseline(g, BaselineMeasure::degree, config.k, config.r, config.b);
    if (config.algo == "cc")
        return select_baseline(g, BaselineMeasure::clustering_coefficient, config.k, config.r,
                               config.b);
    if (config.algo == "ac")
        return select_baseline(g, BaselineMeasure::alpha_centrality, config.k, config.r, config.b);
    if (config.algo == "oracle")
        return brute_force_opt(g, config.k, config.r, config.b, config.oracle_cap);
    throw std::invalid_argument("unknown algorithm: " + config.algo);
}

RunReport run_select(const Graph& g, const LoadResult& load, const RunConfig& config) {
    RunReport report;
    report.config = config;
    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.self_loops_dropped = load.self_loops_dropped;
    report.duplicate_edges_dropped = load.duplicate_edges_dropped;

    SelectionResult result = dispatch_selector(g, config);
    for (node_t seed : result.seeds) report.seeds.push_back(g.label(seed));
    report.marginal_gains = result.marginal_gains;
    std::uint32_t acc = 0;
    for (std::uint32_t gain : result.marginal_gains) {
        acc += gain;
        report.engaged_per_iteration.push_back(acc);
    }
    report.total_engaged = result.total_engaged;
    report.seg_evaluations = result.seg_evaluations;
    report.init_seconds = result.init_seconds;
    report.select_seconds = result.select_seconds;
    return report;
}

RunReport run_select(const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();
    LoadResult load = load_edge_list_file(config.graph_path);
    double load_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    RunReport report = run_select(load.graph, load, config);
    report.load_seconds = load_seconds;
    return report;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["config"] = {
        {"algo", config.algo},         {"graph", config.graph_path}, {"k", config.k},
        {"r", config.r},               {"b", config.b},              {"precision", config.precision},
        {"hash_seed", config.hash_seed}, {"output", config.output},  {"threads", config.threads},
    };
    j["graph"] = {{"nodes", nodes},
                  {"edges", edges},
                  {"self_loops_dropped", self_loops_dropped},
                  {"duplicate_edges_dropped", duplicate_edges_dropped}};
    j["seeds"] = seeds;
    j["marginal_gains"] = marginal_gains;
    j["engaged_per_iteration"] = engaged_per_iteration;
    j["total_engaged"] = total_engaged;
    j["seg_evaluations"] = seg_evaluations;
    j["timings"] = {{"load_seconds", load_seconds},
                    {"init_seconds", init_seconds},
                    {"select_seconds", select_seconds}};
    return j;
}

std::string RunReport::to_csv() const {
    std::ostringstream out;
    out << "algo,graph,k,r,b,precision,hash_seed,threads,nodes,edges,total_engaged,"
           "seg_evaluations,load_seconds,init_seconds,select_seconds,seeds,marginal_gains\n";
    out << config.algo << ',' << config.graph_path << ',' << config.k << ',' << config.r << ','
        << config.b << ',' << config.precision << ',' << config.hash_seed << ',' << config.threads
        << ',' << nodes << ',' << edges << ',' << total_engaged << ',' << seg_evaluations << ','
        << load_seconds << ',' << init_seconds << ',' << select_seconds << ',' << join(seeds)
        << ',' << join(marginal_gains) << '\n';
    return out.str();
}

std::string RunReport::render() const {
    if (config.output == "csv") return to_csv();
    return to_json().dump(2) + "\n";
}

void dump_mapping(const Graph& g, std::ostream& out) {
    for (node_t v = 0; v < g.node_count(); ++v) out << v << '\t' << g.label(v) << '\n';
}

}  // namespace luem
