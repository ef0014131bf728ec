#pragma once

#include "luem/hyperanf.hpp"
#include "luem/seg.hpp"

// Serial reference implementations. These trade speed for obviousness:
// each one is a direct composition of the public primitives and exists so
// the optimized kernels have something independent to be checked against
// (and benchmarked against).
namespace luem::ref {

/// SEG via induced_subgraph + core_decomposition + connected_component.
std::optional<Seg> compute_seg(const Graph& g, node_t seed, std::uint32_t k, std::uint32_t r);

/// Coreness by repeated naive peeling: for each k, delete nodes of degree
/// < k until fixpoint; coreness(v) is the largest k that keeps v.
std::vector<std::uint32_t> coreness(const Graph& g);

/// |N_t(v)| for t = 1..r via one public r_neighbors call per node.
NeighborhoodTable neighborhood_function(const Graph& g, std::uint32_t r);

/// HyperANF over value-semantics HllCounter objects, one round at a time.
/// Must match the register-array kernel bit for bit.
AnvTable hyperanf(const Graph& g, std::uint32_t r, std::uint32_t precision,
                  std::uint64_t hash_seed);

}  // namespace luem::ref
