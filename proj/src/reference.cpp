#include "luem/reference.hpp"

#include "luem/kcore.hpp"

#include <algorithm>

namespace luem::ref {

std::optional<Seg> compute_seg(const Graph& g, node_t seed, std::uint32_t k, std::uint32_t r) {
    if (k < 1 || r < 1) throw std::domain_error("compute_seg requires k >= 1 and r >= 1");
    g.check_node(seed);

    NodeSet ball = r_neighbors(g, seed, r).reached();
    Subgraph ball_sub = induced_subgraph(g, ball);
    NodeSet core = k_core(ball_sub.graph, k);

    auto seed_it = std::lower_bound(ball_sub.to_parent.begin(), ball_sub.to_parent.end(), seed);
    node_t seed_local = static_cast<node_t>(seed_it - ball_sub.to_parent.begin());
    if (!core.contains(seed_local)) return std::nullopt;

    Subgraph core_sub = induced_subgraph(ball_sub.graph, core);
    auto seed_core_it =
        std::lower_bound(core_sub.to_parent.begin(), core_sub.to_parent.end(), seed_local);
    node_t seed_core = static_cast<node_t>(seed_core_it - core_sub.to_parent.begin());
    NodeSet component = connected_component(core_sub.graph, seed_core);

    std::vector<node_t> members;
    for (node_t local : component)
        members.push_back(ball_sub.to_parent[core_sub.to_parent[local]]);
    return Seg{seed, NodeSet(std::move(members))};
}

std::vector<std::uint32_t> coreness(const Graph& g) {
    const node_t n = g.node_count();
    std::vector<std::uint32_t> out(n, 0);
    for (std::uint32_t k = 1;; ++k) {
        std::vector<std::uint8_t> alive(n, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (node_t v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                std::uint32_t deg = 0;
                for (node_t u : g.neighbors(v))
                    if (alive[u]) ++deg;
                if (deg < k) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (node_t v = 0; v < n; ++v)
            if (alive[v]) {
                out[v] = k;
                any = true;
            }
        if (!any) return out;
    }
}

NeighborhoodTable neighborhood_function(const Graph& g, std::uint32_t r) {
    const node_t n = g.node_count();
    NeighborhoodTable table{n, r, std::vector<std::uint32_t>(std::size_t(n) * r, 0)};
    for (node_t v = 0; v < n; ++v) {
        DistanceMap dist = r_neighbors(g, v, r);
        for (std::uint32_t t = 1; t <= r; ++t) {
            std::uint32_t count = 0;
            for (node_t u = 0; u < n; ++u)
                if (dist[u] != DistanceMap::unreached && dist[u] <= t) ++count;
            table.counts[std::size_t(v) * r + (t - 1)] = count;
        }
    }
    return table;
}

AnvTable hyperanf(const Graph& g, std::uint32_t r, std::uint32_t precision,
                  std::uint64_t hash_seed) {
    const node_t n = g.node_count();
    AnvTable table{n, r, std::vector<double>(std::size_t(n) * r, 0.0)};
    if (n == 0) return table;

    std::vector<HllCounter> cur(n, HllCounter(precision));
    for (node_t v = 0; v < n; ++v) cur[v].add(v, hash_seed);

    for (std::uint32_t round = 1; round <= r; ++round) {
        std::vector<HllCounter> nxt = cur;
        for (node_t v = 0; v < n; ++v)
            for (node_t u : g.neighbors(v)) nxt[v].union_with(cur[u]);
        cur = std::move(nxt);
        for (node_t v = 0; v < n; ++v) table.at(v, round) = cur[v].estimate();
    }
    return table;
}

}  // namespace luem::ref
