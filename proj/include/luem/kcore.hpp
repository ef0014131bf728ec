#pragma once

#include "luem/graph.hpp"

namespace luem {

struct CoreDecomposition {
    std::vector<std::uint32_t> coreness;  // per node
    std::uint32_t max_coreness = 0;       // graph degeneracy
};

/// Exact coreness for every node via linear-time bucket peeling.
CoreDecomposition core_decomposition(const Graph& g);

/// Nodes with coreness >= k. k = 0 returns all nodes.
NodeSet k_core(const CoreDecomposition& cores, std::uint32_t k);
NodeSet k_core(const Graph& g, std::uint32_t k);

}  // namespace luem
