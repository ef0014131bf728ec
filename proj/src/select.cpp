#include "luem/select.hpp"

#include "luem/kcore.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace luem {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void finalize(SelectionResult& result, const EngagementState& state) {
    result.total_engaged = state.engaged_count();
    result.engaged_set = state.engaged_set();
    result.seg_evaluations = state.cache().computations();
}

/// Sizes of the r-balls (including the node itself) for the given nodes.
std::vector<std::uint32_t> ball_sizes(const Graph& g, std::span<const node_t> nodes,
                                      std::uint32_t r) {
    std::vector<std::uint32_t> sizes(nodes.size());
    BfsScratch bfs;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        bfs.run(g, nodes[i], r);
        sizes[i] = static_cast<std::uint32_t>(bfs.order().size());
    }
    return sizes;
}

}  // namespace

CandidateQueue::CandidateQueue(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), before);
}

std::vector<CandidateQueue::Entry>::iterator CandidateQueue::locate(node_t v,
                                                                    std::uint32_t bound) {
    Entry key{v, bound, false};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, before);
    while (it != entries_.end() && it->bound == bound && it->node != v) ++it;
    return (it != entries_.end() && it->node == v) ? it : entries_.end();
}

void CandidateQueue::erase_node(node_t v, std::uint32_t bound) {
    auto it = locate(v, bound);
    if (it != entries_.end()) entries_.erase(it);
}

void CandidateQueue::update_bound(node_t v, std::uint32_t old_bound, std::uint32_t new_bound) {
    auto it = locate(v, old_bound);
    if (it == entries_.end()) return;
    Entry moved{v, new_bound, true};
    entries_.erase(it);
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), moved, before);
    entries_.insert(pos, moved);
}

void CandidateQueue::apply_round(node_t selected, std::uint32_t selected_bound,
                                 std::span<const BoundChange> changes) {
    std::vector<Entry> moved;
    moved.reserve(changes.size());

    std::vector<std::size_t> dead;
    dead.reserve(changes.size() + 1);
    if (auto it = locate(selected, selected_bound); it != entries_.end())
        dead.push_back(static_cast<std::size_t>(it - entries_.begin()));
    for (const auto& change : changes) {
        auto it = locate(change.node, change.old_bound);
        if (it == entries_.end()) continue;
        dead.push_back(static_cast<std::size_t>(it - entries_.begin()));
        moved.push_back({change.node, change.new_bound, true});
    }
    std::sort(dead.begin(), dead.end());

    // compact the survivors, then merge the repositioned entries back in
    scratch_.clear();
    scratch_.reserve(entries_.size() - dead.size() + moved.size());
    std::size_t next_dead = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (next_dead < dead.size() && dead[next_dead] == i) {
            ++next_dead;
            continue;
        }
        scratch_.push_back(entries_[i]);
    }
    std::sort(moved.begin(), moved.end(), before);
    entries_.resize(scratch_.size() + moved.size());
    std::merge(scratch_.begin(), scratch_.end(), moved.begin(), moved.end(), entries_.begin(),
               before);
}

bool CandidateQueue::is_sorted() const {
    return std::is_sorted(entries_.begin(), entries_.end(), before);
}

SelectionResult select_ba(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                          int threads) {
    if (b < 1) throw std::domain_error("select_ba requires b >= 1");
    SelectionResult result;
    auto start = clock_type::now();

    NodeSet candidates = k_core(g, k);
    EngagementState state(g.node_count(), k, r);
    state.cache().precompute(g, candidates.members(), threads);
    result.init_seconds = seconds_since(start);

    start = clock_type::now();
    std::vector<std::uint32_t> gains(candidates.size());
    while (result.seeds.size() < b) {
        const auto& nodes = candidates.members();

        auto gain_of = [&](node_t v) -> std::uint32_t {
            const auto& seg = state.cache().at(v);
            if (!seg) return 0;
            std::uint32_t gain = 0;
            for (node_t u : seg->members)
                if (!state.is_engaged(u)) ++gain;
            return gain;
        };

#ifdef _OPENMP
        if (threads > 1 && nodes.size() >= 256) {
#pragma omp parallel for num_threads(threads) schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nodes.size()); ++i)
                gains[i] = gain_of(nodes[i]);
        } else
#endif
        {
            for (std::size_t i = 0; i < nodes.size(); ++i) gains[i] = gain_of(nodes[i]);
        }

        // sequential reduction keeps the pick deterministic: best gain,
        // then smallest id (candidates are already in ascending id order)
        std::uint32_t best_gain = 0;
        node_t best = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (gains[i] > best_gain) {
                best_gain = gains[i];
                best = nodes[i];
            }
        }
        if (best_gain == 0) break;

        state.engage(state.cache().at(best)->members);
        result.seeds.push_back(best);
        result.marginal_gains.push_back(best_gain);
    }

    result.select_seconds = seconds_since(start);
    finalize(result, state);
    return result;
}

// The scan break is slightly stricter than "incumbent >= bound": on an
// exact tie we keep scanning while the next candidate has a smaller id
// than the incumbent, since it could tie on gain and would then win the
// id tie-break. This keeps the seed sequence identical to select_ba.
SelectionResult select_era(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b) {
    if (b < 1) throw std::domain_error("select_era requires b >= 1");
    SelectionResult result;
    auto start = clock_type::now();

    NodeSet candidates = k_core(g, k);
    EngagementState state(g.node_count(), k, r);

    std::vector<CandidateQueue::Entry> entries;
    entries.reserve(candidates.size());
    if (r == 1) {
        for (node_t v : candidates)
            entries.push_back({v, g.degree(v) + 1, false});
    } else {
        auto sizes = ball_sizes(g, candidates.members(), r);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            entries.push_back({candidates.members()[i], sizes[i], false});
    }
    CandidateQueue queue(std::move(entries));
    result.init_seconds = seconds_since(start);

    start = clock_type::now();
    struct Touched {
        node_t node;
        std::uint32_t old_bound;
        std::uint32_t gain;
    };
    std::vector<Touched> touched;
    while (result.seeds.size() < b && !queue.empty()) {
        node_t best = 0;
        std::uint32_t best_gain = 0;
        bool have_best = false;
        std::uint32_t best_old_bound = 0;
        touched.clear();

        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto& entry = queue.at(i);
            if (have_best && (best_gain > entry.bound ||
                              (best_gain == entry.bound && best < entry.node)))
                break;  // nothing ahead can beat or out-tie the incumbent
            std::uint32_t gain = engagement_gain(g, entry.node, state, k, r);
            if (!have_best || gain > best_gain || (gain == best_gain && entry.node < best)) {
                best = entry.node;
                best_gain = gain;
                best_old_bound = entry.bound;
                have_best = true;
            }
            touched.push_back({entry.node, entry.bound, gain});
        }

        if (!have_best || best_gain == 0) break;

        state.engage(state.cache().at(best)->members);
        result.seeds.push_back(best);
        result.marginal_gains.push_back(best_gain);

        std::vector<CandidateQueue::BoundChange> changes;
        changes.reserve(touched.size());
        for (const auto& t : touched)
            if (t.node != best) changes.push_back({t.node, t.old_bound, t.gain});
        queue.apply_round(best, best_old_bound, changes);
    }

    result.select_seconds = seconds_since(start);
    finalize(result, state);
    return result;
}

SelectionResult select_baseline(const Graph& g, BaselineMeasure measure, std::uint32_t k,
                                std::uint32_t r, std::uint32_t b) {
    if (b < 1) throw std::domain_error("select_baseline requires b >= 1");
    SelectionResult result;
    auto start = clock_type::now();

    std::vector<double> score;
    switch (measure) {
        case BaselineMeasure::degree: {
            score.resize(g.node_count());
            for (node_t v = 0; v < g.node_count(); ++v) score[v] = g.degree(v);
            break;
        }
        case BaselineMeasure::clustering_coefficient:
            score = clustering_coefficients(g);
            break;
        case BaselineMeasure::alpha_centrality:
            score = alpha_centrality(g);
            break;
    }

    NodeSet candidates = k_core(g, k);
    std::vector<node_t> ranking(candidates.begin(), candidates.end());
    std::stable_sort(ranking.begin(), ranking.end(), [&](node_t a, node_t b2) {
        return score[a] != score[b2] ? score[a] > score[b2] : a < b2;
    });
    result.init_seconds = seconds_since(start);

    start = clock_type::now();
    EngagementState state(g.node_count(), k, r);
    for (node_t v : ranking) {
        if (result.seeds.size() == b) break;
        const auto& seg = state.cache().get_or_compute(g, v);
        if (!seg) continue;  // null SEG: the node is not selected
        std::uint32_t gain = state.engage(seg->members);
        result.seeds.push_back(v);
        result.marginal_gains.push_back(gain);
    }

    result.select_seconds = seconds_since(start);
    finalize(result, state);
    return result;
}

SelectionResult brute_force_opt(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                                std::uint64_t combination_cap) {
    if (b < 1) throw std::domain_error("brute_force_opt requires b >= 1");
    SelectionResult result;
    auto start = clock_type::now();

    NodeSet candidates = k_core(g, k);
    const std::size_t m = candidates.size();
    const std::uint32_t pick = std::min<std::uint32_t>(b, static_cast<std::uint32_t>(m));

    // C(m, pick) with early cutoff
    double combos = 1.0;
    for (std::uint32_t i = 0; i < pick; ++i) {
        combos *= static_cast<double>(m - i) / static_cast<double>(i + 1);
        if (combos > static_cast<double>(combination_cap))
            throw sizing_error("brute_force_opt: C(" + std::to_string(m) + ", " +
                               std::to_string(pick) + ") exceeds the cap of " +
                               std::to_string(combination_cap) + " combinations");
    }

    SegCache cache(g.node_count(), k, r);
    cache.precompute(g, candidates.members());
    result.init_seconds = seconds_since(start);

    start = clock_type::now();
    const auto& nodes = candidates.members();
    std::vector<std::uint8_t> engaged(g.node_count(), 0);
    std::vector<node_t> undo;
    std::vector<node_t> current, best_seeds;
    std::uint32_t engaged_count = 0, best_count = 0;

    // Depth-first over combinations in lexicographic order; monotonicity
    // makes size-`pick` subsets sufficient, and the first maximum seen is
    // the lexicographically smallest one.
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (current.size() == pick) {
            if (engaged_count > best_count) {
                best_count = engaged_count;
                best_seeds = current;
            }
            return;
        }
        for (std::size_t i = next; i < m; ++i) {
            std::size_t mark = undo.size();
            const auto& seg = cache.at(nodes[i]);
            if (seg) {
                for (node_t u : seg->members) {
                    if (!engaged[u]) {
                        engaged[u] = 1;
                        undo.push_back(u);
                        ++engaged_count;
                    }
                }
            }
            current.push_back(nodes[i]);
            self(self, i + 1);
            current.pop_back();
            while (undo.size() > mark) {
                engaged[undo.back()] = 0;
                undo.pop_back();
                --engaged_count;
            }
        }
    };
    if (pick > 0) recurse(recurse, 0);

    // report the chosen seeds with their greedy-order gains
    EngagementState state(g.node_count(), k, r);
    for (node_t v : best_seeds) {
        std::uint32_t gain = engagement_gain(g, v, state, k, r);
        const auto& seg = state.cache().at(v);
        if (seg) state.engage(seg->members);
        result.seeds.push_back(v);
        result.marginal_gains.push_back(gain);
    }

    result.select_seconds = seconds_since(start);
    result.total_engaged = state.engaged_count();
    result.engaged_set = state.engaged_set();
    result.seg_evaluations = cache.computations();
    return result;
}

std::vector<double> clustering_coefficients(const Graph& g) {
    const node_t n = g.node_count();
    std::vector<std::uint64_t> triangles(n, 0);
    for (node_t u = 0; u < n; ++u) {
        auto nu = g.neighbors(u);
        for (node_t v : nu) {
            if (v <= u) continue;
            // common neighbors w > v close a triangle u < v < w
            auto nv = g.neighbors(v);
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else {
                    ++triangles[u];
                    ++triangles[v];
                    ++triangles[*iu];
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    std::vector<double> cc(n, 0.0);
    for (node_t v = 0; v < n; ++v) {
        std::uint64_t d = g.degree(v);
        if (d >= 2) cc[v] = 2.0 * static_cast<double>(triangles[v]) / static_cast<double>(d * (d - 1));
    }
    return cc;
}

std::vector<double> alpha_centrality(const Graph& g, double alpha, double tolerance,
                                     std::size_t max_iterations) {
    const node_t n = g.node_count();
    std::vector<double> x(n, 1.0);
    if (n == 0) return x;
    const node_t max_deg = g.max_degree();
    if (max_deg == 0) return x;

    if (alpha <= 0.0) alpha = 0.9 / static_cast<double>(max_deg);
    if (alpha >= 1.0 / static_cast<double>(max_deg))
        throw std::domain_error("alpha_centrality: alpha must be below 1/max_degree");

    std::vector<double> next(n);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        double delta = 0.0;
        for (node_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (node_t u : g.neighbors(v)) sum += x[u];
            next[v] = alpha * sum + 1.0;
            delta = std::max(delta, std::abs(next[v] - x[v]));
        }
        x.swap(next);
        if (delta < tolerance) break;
    }
    return x;
}

}  // namespace luem
