#include "luem/run.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace luem;

namespace {

/// Writes a fixture graph to a temp file and cleans it up afterwards.
struct TempGraphFile {
    std::filesystem::path path;

    explicit TempGraphFile(const Graph& g) {
        path = std::filesystem::temp_directory_path() /
               ("luem_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
        std::ofstream out(path);
        write_edge_list(g, out);
    }
    ~TempGraphFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("run_select reports the fixture numbers") {
    TempGraphFile file(fixtures::two_triangle_bridge());
    RunConfig config;
    config.graph_path = file.path.string();
    config.algo = "era";
    config.k = 2;
    config.r = 1;
    config.b = 2;

    auto report = run_select(config);
    CHECK(report.total_engaged == 7);
    CHECK(report.nodes == 7);
    CHECK(report.edges == 10);
    CHECK(report.marginal_gains == std::vector<std::uint32_t>{4, 3});
    CHECK(report.engaged_per_iteration == std::vector<std::uint32_t>{4, 7});

    auto j = report.to_json();
    CHECK(j["total_engaged"] == 7);
    CHECK(j["config"]["algo"] == "era");
    CHECK(j["config"]["k"] == 2);
    CHECK(j["seeds"].size() == 2);
}

TEST_CASE("ba and era agree through the report layer") {
    TempGraphFile file(fixtures::two_triangle_bridge());
    RunConfig config;
    config.graph_path = file.path.string();
    config.k = 2;
    config.r = 1;
    config.b = 2;

    config.algo = "ba";
    auto ba = run_select(config);
    config.algo = "era";
    auto era = run_select(config);
    CHECK(ba.seeds == era.seeds);
    CHECK(ba.total_engaged == era.total_engaged);
}

TEST_CASE("reports are identical apart from timing fields") {
    TempGraphFile file(generate_synthetic(150, 3, 3));
    RunConfig config;
    config.graph_path = file.path.string();
    config.algo = "fca";
    config.k = 2;
    config.r = 2;
    config.b = 3;
    config.hash_seed = 1;

    auto strip = [](nlohmann::json j) {
        j.erase("timings");
        return j;
    };
    CHECK(strip(run_select(config).to_json()) == strip(run_select(config).to_json()));
}

TEST_CASE("seeds are reported as original labels") {
    // labels 10x the dense id
    Graph g = fixtures::two_triangle_bridge();
    std::ostringstream text;
    for (node_t v = 0; v < 7; ++v)
        for (node_t u : g.neighbors(v))
            if (v < u) text << v * 10 << ' ' << u * 10 << '\n';
    auto tmp = std::filesystem::temp_directory_path() / "luem_labels_test.txt";
    {
        std::ofstream out(tmp);
        out << text.str();
    }
    RunConfig config;
    config.graph_path = tmp.string();
    config.algo = "ba";
    config.k = 2;
    config.r = 1;
    config.b = 2;
    auto report = run_select(config);
    CHECK(report.seeds == std::vector<label_t>{30, 0});
    std::filesystem::remove(tmp);
}

TEST_CASE("csv report has a header and one row") {
    TempGraphFile file(fixtures::triangle());
    RunConfig config;
    config.graph_path = file.path.string();
    config.algo = "ba";
    config.k = 2;
    config.r = 1;
    config.b = 1;
    config.output = "csv";
    auto text = run_select(config).render();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.starts_with("algo,graph,k,r,b,"));
    CHECK(text.find("ba," + file.path.string()) != std::string::npos);
}

TEST_CASE("config validation") {
    RunConfig config;
    config.algo = "nope";
    CHECK_THROWS_AS(validate_config(config, false, false), std::invalid_argument);

    config.algo = "ba";
    CHECK_THROWS_AS(validate_config(config, true, false), std::invalid_argument);
    CHECK_THROWS_AS(validate_config(config, false, true), std::invalid_argument);

    config.algo = "fca";
    CHECK_NOTHROW(validate_config(config, true, true));

    config.b = 0;
    CHECK_THROWS_AS(validate_config(config, true, true), std::invalid_argument);
    config.b = 1;
    config.output = "xml";
    CHECK_THROWS_AS(validate_config(config, true, true), std::invalid_argument);
}

TEST_CASE("oracle cap surfaces as a sizing error") {
    TempGraphFile file(generate_synthetic(64, 3, 8));
    RunConfig config;
    config.graph_path = file.path.string();
    config.algo = "oracle";
    config.k = 1;
    config.r = 1;
    config.b = 10;
    config.oracle_cap = 100;
    CHECK_THROWS_AS(run_select(config), sizing_error);
}

TEST_CASE("missing graph file fails as a load error") {
    RunConfig config;
    config.graph_path = "/nonexistent/never.txt";
    CHECK_THROWS_AS(run_select(config), std::runtime_error);
}
