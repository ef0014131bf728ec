#pragma once

#include "luem/graph.hpp"
#include "luem/seg.hpp"

namespace luem {

/// Raised when the brute-force oracle would enumerate too many subsets.
class sizing_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SelectionResult {
    std::vector<node_t> seeds;                 // selection order
    std::vector<std::uint32_t> marginal_gains; // aligned with seeds
    std::uint32_t total_engaged = 0;
    NodeSet engaged_set;
    std::size_t seg_evaluations = 0;  // actual SEG constructions
    double init_seconds = 0.0;
    double select_seconds = 0.0;
    std::vector<std::uint32_t> fca_tree_depths;  // FCA diagnostic: per-seed tree depth

    double elapsed_seconds() const { return init_seconds + select_seconds; }
};

// ERA's candidate ordering: (node, upper bound on gain) kept sorted by
// bound descending, id ascending. Bounds start at |N_r(v)| and are
// replaced by evaluated gains; both dominate the true gain, the former
// because SEG(v) is inside the r-ball, the latter by submodularity.
class CandidateQueue {
public:
    struct Entry {
        node_t node;
        std::uint32_t bound;
        bool evaluated;  // false while bound is still the initial |N_r(v)|
    };

    struct BoundChange {
        node_t node;
        std::uint32_t old_bound;
        std::uint32_t new_bound;
    };

    explicit CandidateQueue(std::vector<Entry> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Entry& at(std::size_t i) const { return entries_[i]; }

    void erase_node(node_t v, std::uint32_t bound);
    /// Moves v to the position for its new bound (binary-search reinsertion).
    void update_bound(node_t v, std::uint32_t old_bound, std::uint32_t new_bound);
    /// One selection round's bookkeeping: drop the selected node and
    /// reposition every changed bound. Equivalent to erase_node plus
    /// update_bound per entry, but one compaction-and-merge pass.
    void apply_round(node_t selected, std::uint32_t selected_bound,
                     std::span<const BoundChange> changes);

    bool is_sorted() const;

private:
    static bool before(const Entry& a, const Entry& b) {
        return a.bound != b.bound ? a.bound > b.bound : a.node < b.node;
    }
    std::vector<Entry>::iterator locate(node_t v, std::uint32_t bound);
    std::vector<Entry> entries_;
    std::vector<Entry> scratch_;
};

/// Greedy hill climbing over precomputed SEGs of all k-core members.
/// Ties break toward the smaller node id; stops early once no candidate
/// adds a new user. threads parallelizes the SEG precompute and the
/// per-iteration gain scan.
SelectionResult select_ba(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                          int threads = 1);

/// Lazy variant of select_ba: candidates are scanned in decreasing
/// upper-bound order and the scan stops once the incumbent provably wins.
/// Returns the same seed sequence as select_ba with at most as many SEG
/// constructions.
SelectionResult select_era(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b);

enum class BaselineMeasure { degree, clustering_coefficient, alpha_centrality };

/// Ranks k-core members by the measure (descending, ties by id), walks
/// the ranking skipping null-SEG nodes until b seeds are taken.
SelectionResult select_baseline(const Graph& g, BaselineMeasure measure, std::uint32_t k,
                                std::uint32_t r, std::uint32_t b);

/// Exact maximizer of rho over all seed subsets of size <= b. Refuses via
/// sizing_error when C(|candidates|, b) exceeds the cap.
SelectionResult brute_force_opt(const Graph& g, std::uint32_t k, std::uint32_t r, std::uint32_t b,
                                std::uint64_t combination_cap = 2'000'000);

/// Local clustering coefficient per node; 0 for degree < 2.
std::vector<double> clustering_coefficients(const Graph& g);

/// Damped power iteration on x = alpha*A*x + 1. alpha <= 0 selects the
/// default 0.9/max_degree; alpha must stay below 1/max_degree.
std::vector<double> alpha_centrality(const Graph& g, double alpha = 0.0,
                                     double tolerance = 1e-10, std::size_t max_iterations = 1000);

}  // namespace luem
