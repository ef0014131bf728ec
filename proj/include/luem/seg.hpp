#pragma once

#include "luem/graph.hpp"

#include <optional>

namespace luem {

/// A seed together with the maximal group it engages: within the seed's
/// r-ball, the member set has induced minimum degree >= k and is the
/// connected piece containing the seed.
struct Seg {
    node_t seed = 0;
    NodeSet members;  // includes the seed

    bool operator==(const Seg&) const = default;
};

// Computes SEGs with reusable scratch: truncated BFS to the r-ball,
// peeling to the k-core of the ball subgraph, then the component of the
// seed. One instance per thread; the graph itself is shared read-only.
class SegComputer {
public:
    std::optional<Seg> compute(const Graph& g, node_t seed, std::uint32_t k, std::uint32_t r);

private:
    BfsScratch bfs_;
    std::vector<node_t> local_of_;       // parent id -> ball-local id, valid where bfs_ visited
    std::vector<std::uint32_t> ldeg_;
    std::vector<std::size_t> loff_;
    std::vector<node_t> ladj_;
    std::vector<std::uint8_t> alive_;
    std::vector<node_t> queue_;
};

/// One-shot convenience wrapper around SegComputer.
std::optional<Seg> compute_seg(const Graph& g, node_t seed, std::uint32_t k, std::uint32_t r);

// SEGs are unique per seed for fixed (k, r), so they are computed at most
// once and memoized. computations() counts actual constructions, which is
// the `seg_evaluations` reported by the selectors.
class SegCache {
public:
    SegCache(node_t node_count, std::uint32_t k, std::uint32_t r)
        : k_(k), r_(r), state_(node_count, kUnknown), segs_(node_count) {}

    std::uint32_t k() const { return k_; }
    std::uint32_t r() const { return r_; }

    const std::optional<Seg>& get_or_compute(const Graph& g, node_t v, SegComputer& computer);
    const std::optional<Seg>& get_or_compute(const Graph& g, node_t v);

    bool computed(node_t v) const { return state_[v] != kUnknown; }
    const std::optional<Seg>& at(node_t v) const { return segs_[v]; }
    std::size_t computations() const { return computations_; }

    /// Fills the cache for `nodes` (must be duplicate-free), in parallel
    /// when threads > 1.
    void precompute(const Graph& g, std::span<const node_t> nodes, int threads = 1);

private:
    static constexpr std::uint8_t kUnknown = 0, kComputed = 1;

    std::uint32_t k_, r_;
    std::vector<std::uint8_t> state_;
    std::vector<std::optional<Seg>> segs_;
    std::size_t computations_ = 0;
    SegComputer own_computer_;
};

/// Engaged users accumulated over the selected seeds, plus the SEG cache.
class EngagementState {
public:
    EngagementState(node_t node_count, std::uint32_t k, std::uint32_t r)
        : cache_(node_count, k, r), engaged_(node_count, 0) {}

    SegCache& cache() { return cache_; }
    const SegCache& cache() const { return cache_; }

    bool is_engaged(node_t v) const { return engaged_[v] != 0; }
    std::uint32_t engaged_count() const { return engaged_count_; }

    /// Marks all members engaged; returns how many were new.
    std::uint32_t engage(const NodeSet& members);

    NodeSet engaged_set() const;

private:
    SegCache cache_;
    std::vector<std::uint8_t> engaged_;
    std::uint32_t engaged_count_ = 0;
};

/// rho(S): number of distinct engaged users.
std::uint32_t engagement(const EngagementState& state);

/// rho(v, S): newly engaged users if v were added; 0 for a null SEG.
/// Computes and caches the SEG of v as a side effect.
std::uint32_t engagement_gain(const Graph& g, node_t v, EngagementState& state, std::uint32_t k,
                              std::uint32_t r);

}  // namespace luem
