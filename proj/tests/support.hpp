#pragma once

// Test-only reference procedures. These share no code path with the
// library routines they are used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rdv/core.hpp"
#include "rdv/gen.hpp"
#include "rdv/geometry.hpp"

namespace rdv::testing {

/// Node set of every T(v), built by walking each bottom up to the top.
inline std::vector<std::set<NodeId>> explicit_node_sets(const RdvInstance& inst)
{
    std::vector<std::set<NodeId>> sets;
    for (const auto& v : inst.vertices) {
        std::set<NodeId> s;
        for (NodeId b : v.bottoms) {
            NodeId cur = b;
            while (true) {
                s.insert(cur);
                if (cur == v.top)
                    break;
                cur = inst.tree.parent(cur);
            }
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

inline bool sets_meet(const std::set<NodeId>& a, const std::set<NodeId>& b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib)
            return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

/// Adjacency matrix from explicit node-set intersection.
inline std::vector<std::vector<char>> brute_adjacency_matrix(const RdvInstance& inst)
{
    const auto sets = explicit_node_sets(inst);
    const std::size_t n = sets.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = sets_meet(sets[i], sets[j]) ? 1 : 0;
    return adj;
}

/// Highest live segment with x_lo <= x <= x_hi and ys <= y_origin.
inline std::optional<HSegment> linear_scan_shoot(const std::vector<HSegment>& live, const RayQuery& q)
{
    std::optional<HSegment> best;
    for (const auto& s : live)
        if (s.x_lo <= q.x && q.x <= s.x_hi && s.ys <= q.y_origin && (!best || s.ys > best->ys))
            best = s;
    return best;
}

/// Random generator settings covering paths, binary-ish trees, bushy trees
/// and single-node hosts.
inline GenConfig mixed_config(std::uint64_t seed, std::int32_t max_n, std::int32_t delta = 1)
{
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
    auto pick = [&](std::int32_t lo, std::int32_t hi) { return std::uniform_int_distribution<std::int32_t>(lo, hi)(rng); };
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_vertices = pick(1, max_n);
    const std::int32_t shapes[] = {1, 2, 3, 4, 8, 1000};
    cfg.max_branching = shapes[pick(0, 5)];
    cfg.tree_nodes = pick(1, std::max(2, 2 * cfg.n_vertices));
    cfg.delta = delta;
    return cfg;
}

}  // namespace rdv::testing
