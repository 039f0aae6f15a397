#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rdv/core.hpp"
#include "rdv/matching.hpp"

namespace rdv {

enum class DensityMode { Sparse, Dense };

struct GenConfig {
    std::uint64_t seed = 1;
    std::int32_t tree_nodes = 16;
    std::int32_t n_vertices = 8;
    std::int32_t max_branching = 3;
    std::int32_t delta = 1;
    DensityMode density_mode = DensityMode::Sparse;
};

/// Random instance, deterministic in cfg.seed. Each non-root node hangs
/// below a uniformly chosen earlier node that still has fewer than
/// max_branching children. Plain vertices pick a bottom uniformly and a top
/// uniformly among its ancestors-or-self; for delta > 1 a random top gets
/// between 1 and delta distinct descendant bottoms. Dense mode ignores the
/// tree parameters and returns gen_dense(n_vertices).
/// Throws std::invalid_argument on non-positive counts.
RdvInstance gen_random(const GenConfig& cfg);

/// Path host tree with n nodes; vertex i (1-based) runs from node ceil(i/2)
/// down to node min(n, ceil(i/2) + n/2). Quadratically many edges, |T| = n.
RdvInstance gen_dense(std::int32_t n);

/// Interval graph as an RDV instance on a path of 2n nodes. Closed
/// intervals: touching endpoints intersect. Throws std::invalid_argument
/// on lo > hi.
RdvInstance intervals_to_rdv(const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals);

/// The 4-trampoline (4-sun) on v1..v8, 0-based here: inner clique
/// {4,5,6,7}; outer 0~{5,6}, 1~{4,6}, 2~{5,7}, 3~{4,7}.
struct Trampoline {
    Adjacency adjacency;
    std::vector<VertexId> order;
};
Trampoline fixture_trampoline();

/// The same graph as a delta = 2 rooted clique tree: a centre node holding
/// the inner clique with one child per outer vertex. Its bottom-up order is
/// v1..v8.
RdvInstance trampoline_instance();

}  // namespace rdv
