#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rdv/core.hpp"

namespace rdv {

using Adjacency = std::vector<std::vector<VertexId>>;

/// Vertex pairs in discovery order. Comparisons ignore pair order and the
/// order of endpoints within a pair.
struct Matching {
    std::vector<std::pair<VertexId, VertexId>> pairs;

    std::size_t size() const { return pairs.size(); }

    /// Pairs as (min, max), sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> normalized() const;

    bool operator==(const Matching& other) const { return normalized() == other.normalized(); }
};

/// Greedy matching: scan `order`; an unmatched vertex is matched to its
/// unmatched neighbour that comes first in `order`. O(n + m).
Matching greedy_reference(const Adjacency& adj, std::span<const VertexId> order);

/// Maximum matching of a plain RDV instance without looking at edges:
/// delayed greedy over a bottom-up order, with the free set kept as
/// horizontal segments in a RayShootIndex. Throws std::invalid_argument on
/// malformed instances or delta != 1.
Matching delayed_greedy(const RdvInstance& inst);

/// Same procedure for subtrees with up to delta leaves: one ray per bottom,
/// highest hit wins. Equals greedy over the bottom-up order, which need not
/// be maximum once delta > 1.
Matching delayed_greedy_delta(const RdvInstance& inst);

struct OracleResult {
    std::size_t size = 0;
    Matching witness;
};

inline constexpr std::size_t kDefaultOracleBound = 24;

/// Exact maximum matching by branch and bound. Throws std::invalid_argument
/// if the graph has more than `bound` vertices or bound exceeds 64.
OracleResult maximum_matching_oracle(const Adjacency& adj, std::size_t bound = kDefaultOracleBound);

/// Within the subgraph induced by `alive`: N[v] is a clique whose members'
/// closed neighbourhoods form an inclusion chain.
bool is_simple_vertex(const Adjacency& adj, VertexId v, const std::vector<bool>& alive);

/// True iff every pair is an edge of `adj` and no vertex is used twice.
bool is_valid_matching(const Adjacency& adj, const Matching& m);

/// True iff no edge of `adj` joins two vertices left unmatched by `m`.
bool is_maximal_matching(const Adjacency& adj, const Matching& m);

}  // namespace rdv
