#pragma once

// Internal: DFS bookkeeping over a valid HostTree.

#include <cstdint>
#include <vector>

#include "rdv/core.hpp"

namespace rdv::detail {

struct TreeOrder {
    std::vector<NodeId> preorder;
    std::vector<std::int32_t> tin;   // preorder position
    std::vector<std::int32_t> tout;  // last preorder position in the subtree
    std::vector<std::int32_t> depth;

    bool is_ancestor_or_self(NodeId a, NodeId d) const
    {
        return tin[static_cast<std::size_t>(a)] <= tin[static_cast<std::size_t>(d)] &&
               tin[static_cast<std::size_t>(d)] <= tout[static_cast<std::size_t>(a)];
    }
};

/// Nodes not reachable from `root` keep tin == -1.
TreeOrder compute_tree_order(const HostTree& tree, NodeId root);

NodeId naive_lca(const HostTree& tree, const TreeOrder& order, NodeId a, NodeId b);

}  // namespace rdv::detail
