#include "luem/seg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace luem {

std::optional<Seg> SegComputer::compute(const Graph& g, node_t seed, std::uint32_t k,
                                        std::uint32_t r) {
    if (k < 1 || r < 1) throw std::domain_error("compute_seg requires k >= 1 and r >= 1");
    g.check_node(seed);

    bfs_.run(g, seed, r);
    auto ball = bfs_.order();
    const node_t bn = static_cast<node_t>(ball.size());

    if (local_of_.size() < g.node_count()) local_of_.resize(g.node_count());
    for (node_t i = 0; i < bn; ++i) local_of_[ball[i]] = i;

    // degree inside the ball, then a local CSR over ball-internal edges
    ldeg_.assign(bn, 0);
    loff_.assign(bn + 1, 0);
    for (node_t i = 0; i < bn; ++i) {
        std::uint32_t d = 0;
        for (node_t u : g.neighbors(ball[i]))
            if (bfs_.visited(u)) ++d;
        ldeg_[i] = d;
        loff_[i + 1] = loff_[i] + d;
    }
    ladj_.resize(loff_[bn]);
    for (node_t i = 0; i < bn; ++i) {
        std::size_t cursor = loff_[i];
        for (node_t u : g.neighbors(ball[i]))
            if (bfs_.visited(u)) ladj_[cursor++] = local_of_[u];
    }

    // peel to the k-core of the ball subgraph
    alive_.assign(bn, 1);
    queue_.clear();
    for (node_t i = 0; i < bn; ++i)
        if (ldeg_[i] < k) {
            alive_[i] = 0;
            queue_.push_back(i);
        }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        node_t i = queue_[head];
        for (std::size_t e = loff_[i]; e < loff_[i + 1]; ++e) {
            node_t j = ladj_[e];
            if (alive_[j] && --ldeg_[j] < k) {
                alive_[j] = 0;
                queue_.push_back(j);
            }
        }
    }

    if (!alive_[0]) return std::nullopt;  // seed is ball-local node 0

    // connected component of the seed within the surviving core
    queue_.clear();
    queue_.push_back(0);
    alive_[0] = 2;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        node_t i = queue_[head];
        for (std::size_t e = loff_[i]; e < loff_[i + 1]; ++e) {
            node_t j = ladj_[e];
            if (alive_[j] == 1) {
                alive_[j] = 2;
                queue_.push_back(j);
            }
        }
    }

    std::vector<node_t> members;
    members.reserve(queue_.size());
    for (node_t i : queue_) members.push_back(ball[i]);
    std::sort(members.begin(), members.end());
    return Seg{seed, NodeSet(std::move(members))};
}

std::optional<Seg> compute_seg(const Graph& g, node_t seed, std::uint32_t k, std::uint32_t r) {
    SegComputer computer;
    return computer.compute(g, seed, k, r);
}

const std::optional<Seg>& SegCache::get_or_compute(const Graph& g, node_t v,
                                                   SegComputer& computer) {
    if (state_[v] == kUnknown) {
        segs_[v] = computer.compute(g, v, k_, r_);
        state_[v] = kComputed;
        ++computations_;
    }
    return segs_[v];
}

const std::optional<Seg>& SegCache::get_or_compute(const Graph& g, node_t v) {
    return get_or_compute(g, v, own_computer_);
}

void SegCache::precompute(const Graph& g, std::span<const node_t> nodes, int threads) {
    std::size_t fresh = 0;
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads) reduction(+ : fresh)
        {
            SegComputer computer;
#pragma omp for schedule(dynamic, 16)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nodes.size()); ++i) {
                node_t v = nodes[i];
                if (state_[v] != kUnknown) continue;
                segs_[v] = computer.compute(g, v, k_, r_);
                state_[v] = kComputed;
                ++fresh;
            }
        }
        computations_ += fresh;
        return;
    }
#else
    (void)threads;
#endif
    for (node_t v : nodes) {
        if (state_[v] != kUnknown) continue;
        segs_[v] = own_computer_.compute(g, v, k_, r_);
        state_[v] = kComputed;
        ++fresh;
    }
    computations_ += fresh;
}

std::uint32_t EngagementState::engage(const NodeSet& members) {
    std::uint32_t fresh = 0;
    for (node_t v : members) {
        if (!engaged_[v]) {
            engaged_[v] = 1;
            ++fresh;
        }
    }
    engaged_count_ += fresh;
    return fresh;
}

NodeSet EngagementState::engaged_set() const {
    std::vector<node_t> out;
    out.reserve(engaged_count_);
    for (node_t v = 0; v < engaged_.size(); ++v)
        if (engaged_[v]) out.push_back(v);
    return NodeSet(std::move(out));
}

std::uint32_t engagement(const EngagementState& state) { return state.engaged_count(); }

std::uint32_t engagement_gain(const Graph& g, node_t v, EngagementState& state, std::uint32_t k,
                              std::uint32_t r) {
    if (k != state.cache().k() || r != state.cache().r())
        throw std::domain_error("engagement_gain called with mismatched (k, r)");
    const auto& seg = state.cache().get_or_compute(g, v);
    if (!seg) return 0;
    std::uint32_t gain = 0;
    for (node_t u : seg->members)
        if (!state.is_engaged(u)) ++gain;
    return gain;
}

}  // namespace luem
