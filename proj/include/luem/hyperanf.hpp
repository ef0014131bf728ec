#pragma once

#include "luem/graph.hpp"
#include "luem/select.hpp"

namespace luem {

// Seeded 64-bit avalanche hash (splitmix64 finalizer). Fixed for all
// platforms so sketch estimates and golden tests are portable.
inline std::uint64_t mix_hash(std::uint64_t x, std::uint64_t seed) {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL * (seed + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Bias-corrected HLL estimate over raw registers (with linear counting
/// for the small range and the large-range tail correction).
double hll_estimate_registers(std::span<const std::uint8_t> registers);

// HyperLogLog counter: 2^p registers, each holding the maximum
// "leading-zero rank" seen for its substream. Registers only grow, so
// register-wise max implements multiset union exactly.
class HllCounter {
public:
    static constexpr std::uint32_t min_precision = 4;
    static constexpr std::uint32_t max_precision = 16;

    explicit HllCounter(std::uint32_t precision);

    std::uint32_t precision() const { return precision_; }
    std::span<const std::uint8_t> registers() const { return registers_; }

    void add_hash(std::uint64_t hash);
    void add(std::uint64_t item, std::uint64_t hash_seed) { add_hash(mix_hash(item, hash_seed)); }

    double estimate() const { return hll_estimate_registers(registers_); }

    /// Register-wise max with a counter of the same precision.
    void union_with(const HllCounter& other);

    bool operator==(const HllCounter&) const = default;

private:
    std::uint32_t precision_;
    std::vector<std::uint8_t> registers_;
};

HllCounter hll_union(const HllCounter& a, const HllCounter& b);

/// Approximate neighborhood values: per node, the estimated |N_t(v)|
/// (including v) for each radius t = 1..r.
struct AnvTable {
    node_t nodes = 0;
    std::uint32_t radius = 0;
    std::vector<double> values;  // nodes x radius, radius-major per node

    double at(node_t v, std::uint32_t t) const { return values[std::size_t(v) * radius + (t - 1)]; }
    double& at(node_t v, std::uint32_t t) { return values[std::size_t(v) * radius + (t - 1)]; }
};

/// Exact counterpart of AnvTable computed by truncated BFS per node.
struct NeighborhoodTable {
    node_t nodes = 0;
    std::uint32_t radius = 0;
    std::vector<std::uint32_t> counts;

    std::uint32_t at(node_t v, std::uint32_t t) const {
        return counts[std::size_t(v) * radius + (t - 1)];
    }
};

// r synchronous rounds of register-max propagation: counter(v) absorbs
// the counters of v's neighbors, so after round t it sketches N_t(v).
// Rounds parallelize over nodes with a barrier in between; the result is
// bit-identical for any thread count.
AnvTable hyperanf(const Graph& g, std::uint32_t r, std::uint32_t precision,
                  std::uint64_t hash_seed, int threads = 1);

NeighborhoodTable exact_neighborhood_function(const Graph& g, std::uint32_t r, int threads = 1);

// FCA's discount after a seed engages its group: a member at BFS level i
// of the group has its nearest r-i hops presumed engaged, so ANV^t loses
// ANV^(r-i) for t > r-i and collapses to 0 at or below it. Level r
// subtracts 1 (the member itself); levels beyond r leave the row alone.
// Results are clamped at 0. Rows are independent, so update order over
// members does not matter.
void apply_engagement_discount(AnvTable& table, node_t v, std::uint32_t level);

/// Heuristic selector: repeatedly takes the k-core member with the top
/// ANV^r estimate, engages its SEG, and discounts the members' estimates.
SelectionResult select_fca(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                           std::uint32_t precision = 7, std::uint64_t hash_seed = 0,
                           int threads = 1);

}  // namespace luem
