#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace luem {

using node_t = std::uint32_t;
using label_t = std::uint64_t;

/// Thrown by the edge-list loader; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Set of dense node ids, stored strictly ascending.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<node_t> members);

    bool contains(node_t v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<node_t>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<node_t> members_;  // sorted, no duplicates
};

/// Per-node BFS distance from a source; unreached nodes hold `unreached`.
class DistanceMap {
public:
    static constexpr std::uint32_t unreached = ~0u;

    DistanceMap(node_t source, std::vector<std::uint32_t> dist)
        : source_(source), dist_(std::move(dist)) {}

    node_t source() const { return source_; }
    std::uint32_t at(node_t v) const { return dist_.at(v); }
    std::uint32_t operator[](node_t v) const { return dist_[v]; }
    std::size_t size() const { return dist_.size(); }

    std::size_t reached_count() const;
    NodeSet reached() const;

private:
    node_t source_;
    std::vector<std::uint32_t> dist_;
};

// Immutable undirected simple graph in CSR form. Node ids are dense
// 0..n-1; adjacency lists are sorted ascending with no self-loops or
// duplicates. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list over dense ids; drops self-loops and
    /// duplicate edges. Labels default to the identity mapping.
    static Graph from_edges(node_t node_count, std::vector<std::pair<node_t, node_t>> edges,
                            std::vector<label_t> labels = {});

    node_t node_count() const { return static_cast<node_t>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    std::size_t edge_count() const { return adj_.size() / 2; }

    std::span<const node_t> neighbors(node_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    node_t degree(node_t v) const { return static_cast<node_t>(offsets_[v + 1] - offsets_[v]); }
    node_t max_degree() const;
    bool has_edge(node_t u, node_t v) const;

    label_t label(node_t v) const { return labels_[v]; }
    const std::vector<label_t>& labels() const { return labels_; }
    std::optional<node_t> node_of_label(label_t label) const;

    void check_node(node_t v) const {
        if (v >= node_count()) throw std::domain_error("node id " + std::to_string(v) + " out of range");
    }

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::size_t> offsets_;  // size n+1
    std::vector<node_t> adj_;           // concatenated sorted neighbor lists
    std::vector<label_t> labels_;       // dense id -> source label
};

struct LoadResult {
    Graph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Whitespace-separated "u v" lines; '#'-prefixed and blank lines are
// comments; labels are remapped to dense ids in first-seen order.
// Windows line endings are accepted. Malformed lines raise parse_error.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::string& path);

/// Writes one "u v" line per edge using original labels.
void write_edge_list(const Graph& g, std::ostream& out);

// Reusable truncated-BFS scratch. Visited marks are stamped so reruns
// avoid O(n) clears; one instance per thread.
class BfsScratch {
public:
    void run(const Graph& g, node_t source, std::uint32_t max_depth);

    std::span<const node_t> order() const { return order_; }  // visit order, source first
    bool visited(node_t v) const { return v < mark_.size() && mark_[v] == round_; }
    std::uint32_t dist(node_t v) const { return dist_[v]; }  // valid only where visited

private:
    std::vector<std::uint32_t> mark_;
    std::vector<std::uint32_t> dist_;
    std::vector<node_t> order_;
    std::uint32_t round_ = 0;
};

/// Nodes within distance r of v, v itself at distance 0.
DistanceMap r_neighbors(const Graph& g, node_t v, std::uint32_t r);

struct Subgraph {
    Graph graph;                     // re-densified ids 0..|H|-1
    std::vector<node_t> to_parent;   // local id -> id in the parent graph
};

/// Subgraph induced by H; local ids follow ascending parent ids.
Subgraph induced_subgraph(const Graph& g, const NodeSet& members);

NodeSet connected_component(const Graph& g, node_t s);

// Preferential-attachment generator: seed clique on m+1 nodes, then each
// new node attaches to m distinct degree-weighted targets. Edge count is
// exactly C(m+1,2) + m*(n-m-1); identical seeds give identical graphs.
Graph generate_synthetic(node_t n, node_t m, std::uint64_t seed);

}  // namespace luem
