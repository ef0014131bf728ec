#include "luem/hyperanf.hpp"

#include "luem/kcore.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace luem {

namespace {

double alpha_for(std::size_t m) {
    switch (m) {
        case 16: return 0.673;
        case 32: return 0.697;
        case 64: return 0.709;
        default: return 0.7213 / (1.0 + 1.079 / static_cast<double>(m));
    }
}

constexpr double two64 = 18446744073709551616.0;  // 2^64

// 2^-rank for every possible register value
constexpr auto inv_pow2 = [] {
    std::array<double, 65> table{};
    double value = 1.0;
    for (int i = 0; i <= 64; ++i) {
        table[i] = value;
        value *= 0.5;
    }
    return table;
}();

}  // namespace

double hll_estimate_registers(std::span<const std::uint8_t> registers) {
    const std::size_t m = registers.size();
    double inverse_sum = 0.0;
    std::size_t zeros = 0;
    for (std::uint8_t reg : registers) {
        inverse_sum += inv_pow2[reg];
        if (reg == 0) ++zeros;
    }
    double raw = alpha_for(m) * static_cast<double>(m) * static_cast<double>(m) / inverse_sum;
    if (raw <= 2.5 * static_cast<double>(m) && zeros > 0)
        return static_cast<double>(m) * std::log(static_cast<double>(m) / static_cast<double>(zeros));
    if (raw > two64 / 30.0) return -two64 * std::log1p(-raw / two64);
    return raw;
}

HllCounter::HllCounter(std::uint32_t precision) : precision_(precision) {
    if (precision < min_precision || precision > max_precision)
        throw std::domain_error("hll precision must be in [4, 16]");
    registers_.assign(std::size_t(1) << precision, 0);
}

void HllCounter::add_hash(std::uint64_t hash) {
    const std::size_t index = hash >> (64 - precision_);
    const std::uint64_t rest = hash << precision_;
    const std::uint8_t rank =
        rest == 0 ? static_cast<std::uint8_t>(64 - precision_ + 1)
                  : static_cast<std::uint8_t>(std::countl_zero(rest) + 1);
    registers_[index] = std::max(registers_[index], rank);
}

void HllCounter::union_with(const HllCounter& other) {
    if (precision_ != other.precision_)
        throw std::domain_error("hll union requires equal precision");
    for (std::size_t i = 0; i < registers_.size(); ++i)
        registers_[i] = std::max(registers_[i], other.registers_[i]);
}

HllCounter hll_union(const HllCounter& a, const HllCounter& b) {
    HllCounter out = a;
    out.union_with(b);
    return out;
}

AnvTable hyperanf(const Graph& g, std::uint32_t r, std::uint32_t precision,
                  std::uint64_t hash_seed, int threads) {
    if (r < 1) throw std::domain_error("hyperanf requires r >= 1");
    if (precision < HllCounter::min_precision || precision > HllCounter::max_precision)
        throw std::domain_error("hll precision must be in [4, 16]");

    const node_t n = g.node_count();
    const std::size_t m = std::size_t(1) << precision;
    AnvTable table{n, r, std::vector<double>(std::size_t(n) * r, 0.0)};
    if (n == 0) return table;

    std::vector<std::uint8_t> cur(std::size_t(n) * m, 0);
    std::vector<std::uint8_t> nxt(std::size_t(n) * m);

    auto seed_row = [&](node_t v) {
        const std::uint64_t hash = mix_hash(v, hash_seed);
        const std::size_t index = hash >> (64 - precision);
        const std::uint64_t rest = hash << precision;
        const std::uint8_t rank =
            rest == 0 ? static_cast<std::uint8_t>(64 - precision + 1)
                      : static_cast<std::uint8_t>(std::countl_zero(rest) + 1);
        cur[std::size_t(v) * m + index] = rank;
    };
    for (node_t v = 0; v < n; ++v) seed_row(v);

    auto propagate = [&](node_t v) {
        std::uint8_t* out = nxt.data() + std::size_t(v) * m;
        const std::uint8_t* self = cur.data() + std::size_t(v) * m;
        std::copy(self, self + m, out);
        for (node_t u : g.neighbors(v)) {
            const std::uint8_t* row = cur.data() + std::size_t(u) * m;
            for (std::size_t i = 0; i < m; ++i) out[i] = std::max(out[i], row[i]);
        }
    };

    for (std::uint32_t round = 1; round <= r; ++round) {
#ifdef _OPENMP
        if (threads > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
            for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(n); ++v) {
                propagate(static_cast<node_t>(v));
                table.at(static_cast<node_t>(v), round) = hll_estimate_registers(
                    {nxt.data() + std::size_t(v) * m, m});
            }
        } else
#endif
        {
            for (node_t v = 0; v < n; ++v) {
                propagate(v);
                table.at(v, round) = hll_estimate_registers({nxt.data() + std::size_t(v) * m, m});
            }
        }
        cur.swap(nxt);
    }
    return table;
}

NeighborhoodTable exact_neighborhood_function(const Graph& g, std::uint32_t r, int threads) {
    if (r < 1) throw std::domain_error("exact_neighborhood_function requires r >= 1");
    const node_t n = g.node_count();
    NeighborhoodTable table{n, r, std::vector<std::uint32_t>(std::size_t(n) * r, 0)};

    auto fill_row = [&](node_t v, BfsScratch& bfs) {
        bfs.run(g, v, r);
        // count reached nodes per depth, then prefix-sum into |N_t(v)|
        std::uint32_t* row = table.counts.data() + std::size_t(v) * r;
        std::fill(row, row + r, 0);
        for (node_t u : bfs.order()) {
            std::uint32_t d = bfs.dist(u);
            if (d > 0) ++row[d - 1];
        }
        std::uint32_t acc = 1;  // v itself
        for (std::uint32_t t = 0; t < r; ++t) {
            acc += row[t];
            row[t] = acc;
        }
    };

#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
        {
            BfsScratch bfs;
#pragma omp for schedule(dynamic, 64)
            for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(n); ++v)
                fill_row(static_cast<node_t>(v), bfs);
        }
        return table;
    }
#endif
    BfsScratch bfs;
    for (node_t v = 0; v < n; ++v) fill_row(v, bfs);
    return table;
}

void apply_engagement_discount(AnvTable& table, node_t v, std::uint32_t level) {
    const std::uint32_t r = table.radius;
    if (level > r) return;  // beyond the horizon, nothing presumed engaged
    const std::uint32_t covered = r - level;
    const double subtrahend = covered == 0 ? 1.0 : table.at(v, covered);
    for (std::uint32_t t = covered + 1; t <= r; ++t)
        table.at(v, t) = std::max(0.0, table.at(v, t) - subtrahend);
    for (std::uint32_t t = 1; t <= covered; ++t) table.at(v, t) = 0.0;
}

SelectionResult select_fca(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                           std::uint32_t precision, std::uint64_t hash_seed, int threads) {
    if (b < 1) throw std::domain_error("select_fca requires b >= 1");
    using clock_type = std::chrono::steady_clock;
    auto start = clock_type::now();

    SelectionResult result;
    NodeSet core = k_core(g, k);
    EngagementState state(g.node_count(), k, r);
    if (core.empty()) {
        result.init_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        return result;
    }

    // ANV estimates live on the core-induced subgraph
    Subgraph sub = induced_subgraph(g, core);
    AnvTable anv = hyperanf(sub.graph, r, precision, hash_seed, threads);

    std::vector<node_t> local_of(g.node_count(), 0);
    for (node_t local = 0; local < sub.to_parent.size(); ++local)
        local_of[sub.to_parent[local]] = local;

    // candidate order: ANV^r descending, parent id ascending on ties
    struct Candidate {
        double anv_r;
        node_t local;
    };
    std::vector<Candidate> order;
    order.reserve(sub.to_parent.size());
    for (node_t local = 0; local < sub.to_parent.size(); ++local)
        order.push_back({anv.at(local, r), local});
    auto before = [](const Candidate& a, const Candidate& b2) {
        return a.anv_r != b2.anv_r ? a.anv_r > b2.anv_r : a.local < b2.local;
    };
    std::sort(order.begin(), order.end(), before);
    result.init_seconds = std::chrono::duration<double>(clock_type::now() - start).count();

    start = clock_type::now();
    BfsScratch tree_bfs;
    std::vector<Candidate> moved, survivors;
    std::vector<std::size_t> dead;
    std::size_t head = 0;  // consumed prefix of `order`
    while (result.seeds.size() < b && head < order.size()) {
        node_t pick_local = order[head].local;
        node_t pick = sub.to_parent[pick_local];
        ++head;

        const auto& seg = state.cache().get_or_compute(g, pick);
        if (!seg) continue;  // null SEG: drop the candidate, keep going

        std::uint32_t gain = state.engage(seg->members);
        result.seeds.push_back(pick);
        result.marginal_gains.push_back(gain);

        // shortest-path tree of the group, rooted at the seed
        Subgraph group = induced_subgraph(g, seg->members);
        auto root_it = std::lower_bound(group.to_parent.begin(), group.to_parent.end(), pick);
        node_t root_local = static_cast<node_t>(root_it - group.to_parent.begin());
        tree_bfs.run(group.graph, root_local, DistanceMap::unreached - 1);

        std::uint32_t tree_depth = 0;
        for (node_t member_local = 0; member_local < group.to_parent.size(); ++member_local)
            tree_depth = std::max(tree_depth, tree_bfs.dist(member_local));
        result.fca_tree_depths.push_back(tree_depth);

        // discount the members, then restore the order in one
        // compaction-and-merge pass (same outcome as one-at-a-time
        // binary-search reinsertion)
        moved.clear();
        dead.clear();
        for (node_t member_local = 0; member_local < group.to_parent.size(); ++member_local) {
            node_t member = group.to_parent[member_local];
            node_t core_local = local_of[member];
            std::uint32_t level = tree_bfs.dist(member_local);
            double old_key = anv.at(core_local, r);
            apply_engagement_discount(anv, core_local, level);
            if (member == pick) continue;

            Candidate old_entry{old_key, core_local};
            auto it = std::lower_bound(order.begin() + head, order.end(), old_entry, before);
            if (it == order.end() || it->local != core_local)
                continue;  // already selected or dropped
            dead.push_back(static_cast<std::size_t>(it - order.begin()));
            moved.push_back({anv.at(core_local, r), core_local});
        }
        std::sort(dead.begin(), dead.end());
        survivors.clear();
        std::size_t next_dead = 0;
        for (std::size_t i = head; i < order.size(); ++i) {
            if (next_dead < dead.size() && dead[next_dead] == i) {
                ++next_dead;
                continue;
            }
            survivors.push_back(order[i]);
        }
        std::sort(moved.begin(), moved.end(), before);
        order.resize(survivors.size() + moved.size());
        std::merge(survivors.begin(), survivors.end(), moved.begin(), moved.end(), order.begin(),
                   before);
        head = 0;
    }

    result.select_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
    result.total_engaged = state.engaged_count();
    result.engaged_set = state.engaged_set();
    result.seg_evaluations = state.cache().computations();
    return result;
}

}  // namespace luem
