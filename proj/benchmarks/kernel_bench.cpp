// Times the optimized kernels against their serial references on a
// synthetic graph:
//
//   neighborhood   exact |N_t(v)| kernel vs the per-node r_neighbors loop
//   hyperanf       register-array kernel vs the HllCounter reference
//   seg_batch      scratch-based SEG precompute vs the composed reference
//
// Usage: kernel_bench [n] [m] [threads]

#include "luem/hyperanf.hpp"
#include "luem/kcore.hpp"
#include "luem/reference.hpp"
#include "luem/seg.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace luem;

namespace {

double time_of(const std::function<void()>& work) {
    auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* kernel, double ref_seconds, double serial_seconds,
            double parallel_seconds, bool match) {
    std::cout << std::left << std::setw(14) << kernel << std::right << std::fixed
              << std::setprecision(4) << std::setw(12) << ref_seconds << std::setw(12)
              << serial_seconds << std::setw(12) << parallel_seconds << std::setw(10)
              << std::setprecision(2) << ref_seconds / serial_seconds << "x"
              << (match ? "" : "   MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    node_t n = argc > 1 ? static_cast<node_t>(std::atoi(argv[1])) : 20000;
    node_t m = argc > 2 ? static_cast<node_t>(std::atoi(argv[2])) : 3;
    int threads = argc > 3 ? std::atoi(argv[3]) : 4;
    const std::uint32_t r = 3, k = 3, precision = 7;

    Graph g = generate_synthetic(n, m, 1);
    std::cout << "graph: n=" << g.node_count() << " m=" << g.edge_count() << " threads=" << threads
              << "\n\n";
    std::cout << std::left << std::setw(14) << "kernel" << std::right << std::setw(12)
              << "reference" << std::setw(12) << "serial" << std::setw(12) << "parallel"
              << std::setw(11) << "speedup" << '\n';

    {
        NeighborhoodTable ref_table, serial_table, parallel_table;
        double t_ref = time_of([&] { ref_table = ref::neighborhood_function(g, r); });
        double t_ser = time_of([&] { serial_table = exact_neighborhood_function(g, r, 1); });
        double t_par = time_of([&] { parallel_table = exact_neighborhood_function(g, r, threads); });
        report("neighborhood", t_ref, t_ser, t_par,
               ref_table.counts == serial_table.counts &&
                   serial_table.counts == parallel_table.counts);
    }
    {
        AnvTable ref_table, serial_table, parallel_table;
        double t_ref = time_of([&] { ref_table = ref::hyperanf(g, r, precision, 0); });
        double t_ser = time_of([&] { serial_table = hyperanf(g, r, precision, 0, 1); });
        double t_par = time_of([&] { parallel_table = hyperanf(g, r, precision, 0, threads); });
        report("hyperanf", t_ref, t_ser, t_par,
               ref_table.values == serial_table.values &&
                   serial_table.values == parallel_table.values);
    }
    {
        NodeSet core = k_core(g, k);
        bool match = true;
        double t_ref = time_of([&] {
            for (node_t v : core) (void)ref::compute_seg(g, v, k, r);
        });
        SegCache serial_cache(g.node_count(), k, r);
        double t_ser = time_of([&] { serial_cache.precompute(g, core.members(), 1); });
        SegCache parallel_cache(g.node_count(), k, r);
        double t_par = time_of([&] { parallel_cache.precompute(g, core.members(), threads); });
        for (node_t v : core)
            match &= serial_cache.at(v) == parallel_cache.at(v);
        report("seg_batch", t_ref, t_ser, t_par, match);
    }
    return 0;
}
