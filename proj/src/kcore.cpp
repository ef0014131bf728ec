#include "luem/kcore.hpp"

#include <algorithm>

namespace luem {

// Batagelj-Zaversnik peeling: nodes kept in an array sorted by current
// degree, with bucket start offsets; removing a node demotes each
// still-present neighbor by one bucket. Nodes are placed in ascending id
// order within equal degrees, so the peel order is deterministic.
CoreDecomposition core_decomposition(const Graph& g) {
    const node_t n = g.node_count();
    CoreDecomposition out;
    out.coreness.assign(n, 0);
    if (n == 0) return out;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (node_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (node_t v = 0; v < n; ++v) ++bin[deg[v]];
    std::size_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }

    std::vector<node_t> vert(n);
    std::vector<std::size_t> pos(n);
    for (node_t v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::uint32_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        node_t v = vert[i];
        out.coreness[v] = deg[v];
        out.max_coreness = std::max(out.max_coreness, deg[v]);
        for (node_t u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            // swap u with the first node of its bucket, then shrink the bucket
            std::size_t u_pos = pos[u];
            std::size_t head_pos = bin[deg[u]];
            node_t head = vert[head_pos];
            if (u != head) {
                std::swap(vert[u_pos], vert[head_pos]);
                pos[u] = head_pos;
                pos[head] = u_pos;
            }
            ++bin[deg[u]];
            --deg[u];
        }
    }
    return out;
}

NodeSet k_core(const CoreDecomposition& cores, std::uint32_t k) {
    std::vector<node_t> members;
    for (node_t v = 0; v < cores.coreness.size(); ++v)
        if (cores.coreness[v] >= k) members.push_back(v);
    return NodeSet(std::move(members));
}

NodeSet k_core(const Graph& g, std::uint32_t k) {
    return k_core(core_decomposition(g), k);
}

}  // namespace luem
