#include "luem/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>

namespace luem {

NodeSet::NodeSet(std::vector<node_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(node_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t DistanceMap::reached_count() const {
    std::size_t n = 0;
    for (auto d : dist_)
        if (d != unreached) ++n;
    return n;
}

NodeSet DistanceMap::reached() const {
    std::vector<node_t> out;
    for (node_t v = 0; v < dist_.size(); ++v)
        if (dist_[v] != unreached) out.push_back(v);
    return NodeSet(std::move(out));
}

Graph Graph::from_edges(node_t node_count, std::vector<std::pair<node_t, node_t>> edges,
                        std::vector<label_t> labels) {
    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    if (labels.empty()) {
        labels.resize(node_count);
        for (node_t v = 0; v < node_count; ++v) labels[v] = v;
    }
    g.labels_ = std::move(labels);

    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::domain_error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());

    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.adj_.resize(edges.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // edges are sorted by (min,max), so each list ends up sorted except for
    // the interleaving of smaller-endpoint entries; sort per node to be sure
    for (node_t v = 0; v < node_count; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

node_t Graph::max_degree() const {
    node_t best = 0;
    for (node_t v = 0; v < node_count(); ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(node_t u, node_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<node_t> Graph::node_of_label(label_t label) const {
    for (node_t v = 0; v < node_count(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

namespace {

bool parse_label(const std::string& tok, label_t& out) {
    if (tok.empty()) return false;
    label_t value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        label_t digit = static_cast<label_t>(c - '0');
        if (value > (std::numeric_limits<label_t>::max() - digit) / 10) return false;  // overflow
        value = value * 10 + digit;
    }
    out = value;
    return true;
}

}  // namespace

LoadResult load_edge_list(std::istream& in) {
    std::unordered_map<label_t, node_t> dense;
    std::vector<label_t> labels;
    std::vector<std::pair<node_t, node_t>> edges;
    LoadResult result;

    auto intern = [&](label_t label) {
        auto [it, fresh] = dense.try_emplace(label, static_cast<node_t>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::vector<std::string> tokens;
        while (pos != std::string::npos) {
            std::size_t end = line.find_first_of(" \t", pos);
            tokens.push_back(line.substr(pos, end == std::string::npos ? end : end - pos));
            pos = line.find_first_not_of(" \t", end);
        }
        if (tokens.size() != 2)
            throw parse_error(line_no, "expected two node labels, got " + std::to_string(tokens.size()) + " tokens");
        label_t a, b;
        if (!parse_label(tokens[0], a)) throw parse_error(line_no, "malformed token '" + tokens[0] + "'");
        if (!parse_label(tokens[1], b)) throw parse_error(line_no, "malformed token '" + tokens[1] + "'");

        node_t u = intern(a);
        node_t v = intern(b);
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        edges.emplace_back(u, v);
    }

    // count duplicates before from_edges dedups them
    {
        auto canon = edges;
        for (auto& [u, v] : canon)
            if (u > v) std::swap(u, v);
        std::sort(canon.begin(), canon.end());
        std::size_t unique_count =
            static_cast<std::size_t>(std::unique(canon.begin(), canon.end()) - canon.begin());
        result.duplicate_edges_dropped = edges.size() - unique_count;
    }

    const node_t n = static_cast<node_t>(labels.size());
    result.graph = Graph::from_edges(n, std::move(edges), std::move(labels));
    return result;
}

LoadResult load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (node_t v = 0; v < g.node_count(); ++v)
        for (node_t u : g.neighbors(v))
            if (v < u) out << g.label(v) << ' ' << g.label(u) << '\n';
}

void BfsScratch::run(const Graph& g, node_t source, std::uint32_t max_depth) {
    g.check_node(source);
    if (mark_.size() < g.node_count()) {
        mark_.assign(g.node_count(), 0);
        dist_.resize(g.node_count());
        round_ = 0;
    }
    ++round_;
    if (round_ == 0) {  // stamp wrap-around
        std::fill(mark_.begin(), mark_.end(), 0);
        round_ = 1;
    }
    order_.clear();
    order_.push_back(source);
    mark_[source] = round_;
    dist_[source] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
        node_t v = order_[head];
        std::uint32_t d = dist_[v];
        if (d == max_depth) continue;
        for (node_t u : g.neighbors(v)) {
            if (mark_[u] == round_) continue;
            mark_[u] = round_;
            dist_[u] = d + 1;
            order_.push_back(u);
        }
    }
}

DistanceMap r_neighbors(const Graph& g, node_t v, std::uint32_t r) {
    BfsScratch bfs;
    bfs.run(g, v, r);
    std::vector<std::uint32_t> dist(g.node_count(), DistanceMap::unreached);
    for (node_t u : bfs.order()) dist[u] = bfs.dist(u);
    return DistanceMap(v, std::move(dist));
}

Subgraph induced_subgraph(const Graph& g, const NodeSet& members) {
    for (node_t v : members) g.check_node(v);

    Subgraph sub;
    sub.to_parent.assign(members.begin(), members.end());
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t local = 0; local < sub.to_parent.size(); ++local) {
        node_t parent = sub.to_parent[local];
        for (node_t u : g.neighbors(parent)) {
            if (u <= parent || !members.contains(u)) continue;
            auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), u);
            edges.emplace_back(local, static_cast<node_t>(it - sub.to_parent.begin()));
        }
    }
    std::vector<label_t> labels(sub.to_parent.size());
    for (node_t local = 0; local < sub.to_parent.size(); ++local)
        labels[local] = g.label(sub.to_parent[local]);
    sub.graph = Graph::from_edges(static_cast<node_t>(sub.to_parent.size()), std::move(edges),
                                  std::move(labels));
    return sub;
}

NodeSet connected_component(const Graph& g, node_t s) {
    BfsScratch bfs;
    bfs.run(g, s, DistanceMap::unreached - 1);
    auto order = bfs.order();
    return NodeSet(std::vector<node_t>(order.begin(), order.end()));
}

Graph generate_synthetic(node_t n, node_t m, std::uint64_t seed) {
    if (m < 1 || n <= m) throw std::domain_error("generator requires n > m >= 1");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<node_t, node_t>> edges;
    std::vector<node_t> pool;  // one entry per edge endpoint, drives preferential attachment

    for (node_t u = 0; u <= m; ++u)
        for (node_t v = u + 1; v <= m; ++v) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }

    std::vector<node_t> picked;
    for (node_t v = m + 1; v < n; ++v) {
        picked.clear();
        while (picked.size() < m) {
            node_t target = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            if (std::find(picked.begin(), picked.end(), target) == picked.end())
                picked.push_back(target);
        }
        for (node_t target : picked) {
            edges.emplace_back(target, v);
            pool.push_back(target);
            pool.push_back(v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace luem
