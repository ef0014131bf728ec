#pragma once

#include "luem/graph.hpp"

#include <random>

// Small graphs used across the test suites.
namespace fixtures {

using luem::Graph;
using luem::node_t;

inline Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph path(node_t n) {
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph star(node_t leaves) {
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

inline Graph clique(node_t n) {
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t u = 0; u < n; ++u)
        for (node_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle(node_t n) {
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

// Triangle {0,1,2}, bridge edge 2-3, 4-clique {3,4,5,6}: seven nodes, ten
// edges. Greedy engages {3,4,5,6} first, then {0,1,2}.
inline Graph two_triangle_bridge() {
    return Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

inline Graph two_disjoint_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

/// Triangles {0,1,2} and {3,4,5} joined by the single edge 2-3.
inline Graph bridged_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

/// Two triangles connected by a path of `hops` edges between nodes 2 and 3.
inline Graph far_triangles(node_t hops) {
    std::vector<std::pair<node_t, node_t>> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    node_t prev = 2;
    node_t next_id = 6;
    for (node_t i = 1; i < hops; ++i) {
        edges.emplace_back(prev, next_id);
        prev = next_id++;
    }
    edges.emplace_back(prev, 3);
    return Graph::from_edges(next_id, std::move(edges));
}

/// Star K_{1,5} on 0..5 plus a disjoint triangle {6,7,8}; the max-degree
/// node (the star center) has no 2-core membership.
inline Graph star_plus_triangle() {
    return Graph::from_edges(
        9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7}, {7, 8}, {8, 6}});
}

/// Circulant cycle with chords at the given stride offsets.
inline Graph circulant(node_t n, std::initializer_list<node_t> strides) {
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t v = 0; v < n; ++v)
        for (node_t s : strides) edges.emplace_back(v, (v + s) % n);
    return Graph::from_edges(n, std::move(edges));
}

/// Erdos-Renyi G(n, p), deterministic per seed.
inline Graph er_random(node_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t u = 0; u < n; ++u)
        for (node_t v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

/// Two or three dense pockets of 4-6 nodes plus at most one cross edge;
/// never more than 12 nodes. Small stand-ins for community structure.
inline Graph clumped_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    int clumps = rnd(2, 3);
    std::vector<std::pair<node_t, node_t>> edges;
    node_t base = 0;
    for (int c = 0; c < clumps; ++c) {
        int size = rnd(4, clumps == 2 ? 6 : 4);
        for (node_t u = 0; u < static_cast<node_t>(size); ++u)
            for (node_t v = u + 1; v < static_cast<node_t>(size); ++v)
                if (rng() % 100 < 90) edges.emplace_back(base + u, base + v);
        base += static_cast<node_t>(size);
    }
    if (rng() % 2) {
        node_t u = static_cast<node_t>(rng() % base), v = static_cast<node_t>(rng() % base);
        if (u != v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(base, std::move(edges));
}

/// The selector-comparison corpus: mostly clumped graphs (the regime the
/// lazy pruning targets) with ER and preferential-attachment samples mixed
/// in. |V| <= 12 throughout.
inline Graph corpus_graph(std::uint64_t i) {
    if (i % 10 < 8) return clumped_random(31 * i + 7);
    if (i % 10 == 8) return er_random(8 + i % 5, 0.45, 77 * i + 3);
    return luem::generate_synthetic(8 + i % 5, 3, 13 * i + 1);
}

}  // namespace fixtures
