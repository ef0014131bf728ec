#include "luem/hyperanf.hpp"
#include "luem/kcore.hpp"
#include "luem/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;    // graph file missing or malformed
constexpr int exit_config = 64;  // invalid configuration
constexpr int exit_sizing = 65;  // oracle combination cap exceeded

luem::LoadResult load_graph(const std::string& path) {
    auto load = luem::load_edge_list_file(path);
    if (load.self_loops_dropped || load.duplicate_edges_dropped)
        std::cerr << "warning: dropped " << load.self_loops_dropped << " self-loops and "
                  << load.duplicate_edges_dropped << " duplicate edges\n";
    return load;
}

double now_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_select(const luem::RunConfig& config, const std::string& mapping_path) {
    auto start = std::chrono::steady_clock::now();
    auto load = load_graph(config.graph_path);
    double load_seconds = now_seconds(start);

    if (!mapping_path.empty()) {
        std::ofstream out(mapping_path);
        if (!out) throw std::runtime_error("cannot open mapping file: " + mapping_path);
        luem::dump_mapping(load.graph, out);
    }

    auto report = luem::run_select(load.graph, load, config);
    report.load_seconds = load_seconds;
    std::cout << report.render();
    return exit_ok;
}

int cmd_seg(const std::string& graph_path, luem::label_t seed_label, std::uint32_t k,
            std::uint32_t r, const std::string& output) {
    auto load = load_graph(graph_path);
    const auto& g = load.graph;
    auto seed = g.node_of_label(seed_label);
    if (!seed) throw std::invalid_argument("seed label not present in graph");

    auto seg = luem::compute_seg(g, *seed, k, r);
    std::vector<luem::label_t> members;
    if (seg)
        for (luem::node_t v : seg->members) members.push_back(g.label(v));
    std::sort(members.begin(), members.end());

    if (output == "csv") {
        std::cout << "seed,k,r,null,size,members\n"
                  << seed_label << ',' << k << ',' << r << ',' << (seg ? 0 : 1) << ','
                  << members.size() << ',';
        for (std::size_t i = 0; i < members.size(); ++i)
            std::cout << (i ? ";" : "") << members[i];
        std::cout << '\n';
    } else {
        nlohmann::json j{{"seed", seed_label}, {"k", k},           {"r", r},
                         {"null", !seg},      {"size", members.size()}, {"members", members}};
        std::cout << j.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_kcore(const std::string& graph_path, std::uint32_t k, bool k_given,
              const std::string& output) {
    auto load = load_graph(graph_path);
    const auto& g = load.graph;
    auto start = std::chrono::steady_clock::now();
    auto cores = luem::core_decomposition(g);
    double seconds = now_seconds(start);

    std::size_t core_size = 0;
    if (k_given) core_size = luem::k_core(cores, k).size();

    if (output == "csv") {
        std::cout << "nodes,edges,max_coreness,seconds";
        if (k_given) std::cout << ",k,kcore_size";
        std::cout << '\n'
                  << g.node_count() << ',' << g.edge_count() << ',' << cores.max_coreness << ','
                  << seconds;
        if (k_given) std::cout << ',' << k << ',' << core_size;
        std::cout << '\n';
    } else {
        nlohmann::json j{{"nodes", g.node_count()},
                         {"edges", g.edge_count()},
                         {"max_coreness", cores.max_coreness},
                         {"seconds", seconds}};
        if (k_given) {
            j["k"] = k;
            j["kcore_size"] = core_size;
        }
        std::cout << j.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_anf(const std::string& graph_path, std::uint32_t r, std::uint32_t precision,
            std::uint64_t hash_seed, int threads) {
    auto load = load_graph(graph_path);
    const auto& g = load.graph;
    auto table = luem::hyperanf(g, r, precision, hash_seed, threads);

    std::cout << "node";
    for (std::uint32_t t = 1; t <= r; ++t) std::cout << ",anv_" << t;
    std::cout << '\n';
    for (luem::node_t v = 0; v < g.node_count(); ++v) {
        std::cout << g.label(v);
        for (std::uint32_t t = 1; t <= r; ++t) std::cout << ',' << table.at(v, t);
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_gen(luem::node_t n, luem::node_t m, std::uint64_t seed, const std::string& out_path) {
    luem::Graph g = luem::generate_synthetic(n, m, seed);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << "# synthetic preferential-attachment graph: n=" << n << " m=" << m << " seed=" << seed
        << '\n';
    luem::write_edge_list(g, out);
    std::cerr << "wrote " << g.node_count() << " nodes, " << g.edge_count() << " edges to "
              << out_path << '\n';
    return exit_ok;
}

int cmd_bench(const std::vector<luem::node_t>& sizes, const std::vector<std::string>& algos,
              std::uint32_t k, std::uint32_t r, std::uint32_t b, luem::node_t m,
              std::uint64_t gen_seed, int threads) {
    std::cout << "algorithm,n,seconds\n";
    for (luem::node_t n : sizes) {
        luem::Graph g = luem::generate_synthetic(n, m, gen_seed);
        for (const std::string& algo : algos) {
            luem::RunConfig config;
            config.algo = algo;
            config.k = k;
            config.r = r;
            config.b = b;
            config.threads = threads;
            auto start = std::chrono::steady_clock::now();
            auto result = luem::dispatch_selector(g, config);
            (void)result;
            std::cout << algo << ',' << n << ',' << now_seconds(start) << '\n';
            std::cout.flush();
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seed selection maximizing locally engaged users"};
    app.require_subcommand(1);

    std::string graph_path, output = "json", mapping_path;
    luem::RunConfig config;

    auto* select = app.add_subcommand("select", "Run a seed-selection algorithm");
    select->add_option("--graph", config.graph_path, "edge-list file")->required();
    select->add_option("--algo", config.algo, "ba|era|fca|degree|cc|ac|oracle");
    select->add_option("--k", config.k, "minimum degree threshold");
    select->add_option("--r", config.r, "distance threshold");
    select->add_option("--b", config.b, "number of seeds");
    auto* precision_opt = select->add_option("--precision", config.precision, "HLL precision (fca)");
    auto* seed_opt = select->add_option("--hash-seed", config.hash_seed, "sketch hash seed (fca)");
    select->add_option("--output", config.output, "json|csv");
    select->add_option("--threads", config.threads, "worker threads");
    select->add_option("--oracle-cap", config.oracle_cap, "combination cap for --algo oracle");
    select->add_option("--dump-mapping", mapping_path, "write dense-id/label mapping to a file");

    auto* seg = app.add_subcommand("seg", "Compute the engaged group of one seed");
    luem::label_t seed_label = 0;
    std::uint32_t k = 1, r = 1;
    seg->add_option("--graph", graph_path, "edge-list file")->required();
    seg->add_option("--seed", seed_label, "seed node label")->required();
    seg->add_option("--k", k, "minimum degree threshold");
    seg->add_option("--r", r, "distance threshold");
    seg->add_option("--output", output, "json|csv");

    auto* kcore = app.add_subcommand("kcore", "Core decomposition summary");
    kcore->add_option("--graph", graph_path, "edge-list file")->required();
    auto* k_opt = kcore->add_option("--k", k, "also report the size of the k-core");
    kcore->add_option("--output", output, "json|csv");

    auto* anf = app.add_subcommand("anf", "Dump approximate neighborhood values as CSV");
    std::uint32_t anf_r = 2, anf_precision = 7;
    std::uint64_t anf_seed = 0;
    int anf_threads = 1;
    anf->add_option("--graph", graph_path, "edge-list file")->required();
    anf->add_option("--r", anf_r, "radius");
    anf->add_option("--precision", anf_precision, "HLL precision");
    anf->add_option("--hash-seed", anf_seed, "sketch hash seed");
    anf->add_option("--threads", anf_threads, "worker threads");

    auto* gen = app.add_subcommand("gen", "Write a synthetic graph as an edge list");
    luem::node_t gen_n = 1000, gen_m = 3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "node count");
    gen->add_option("--m", gen_m, "edges per new node");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file")->required();

    auto* bench = app.add_subcommand("bench", "Time algorithms over synthetic sizes (CSV)");
    std::vector<luem::node_t> bench_sizes{10000, 20000, 40000};
    std::vector<std::string> bench_algos{"fca", "era"};
    std::uint32_t bench_k = 3, bench_r = 2, bench_b = 10;
    luem::node_t bench_m = 3;
    std::uint64_t bench_gen_seed = 1;
    int bench_threads = 1;
    bench->add_option("--sizes", bench_sizes, "node counts")->delimiter(',');
    bench->add_option("--algos", bench_algos, "algorithms")->delimiter(',');
    bench->add_option("--k", bench_k, "minimum degree threshold");
    bench->add_option("--r", bench_r, "distance threshold");
    bench->add_option("--b", bench_b, "number of seeds");
    bench->add_option("--m", bench_m, "generator edges per node");
    bench->add_option("--gen-seed", bench_gen_seed, "generator seed");
    bench->add_option("--threads", bench_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (select->parsed()) {
            luem::validate_config(config, precision_opt->count() > 0, seed_opt->count() > 0);
            return cmd_select(config, mapping_path);
        }
        if (seg->parsed()) {
            if (k < 1 || r < 1) throw std::invalid_argument("k and r must be positive");
            return cmd_seg(graph_path, seed_label, k, r, output);
        }
        if (kcore->parsed()) return cmd_kcore(graph_path, k, k_opt->count() > 0, output);
        if (anf->parsed()) return cmd_anf(graph_path, anf_r, anf_precision, anf_seed, anf_threads);
        if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_seed, gen_out);
        if (bench->parsed())
            return cmd_bench(bench_sizes, bench_algos, bench_k, bench_r, bench_b, bench_m,
                             bench_gen_seed, bench_threads);
    } catch (const luem::sizing_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_sizing;
    } catch (const luem::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;  // covers unreadable graph files
    }
    return exit_ok;
}
