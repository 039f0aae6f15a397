#pragma once

/// \file core.hpp
/// \brief Rooted clique-tree instances: host tree, per-vertex downward paths
/// (or subtrees with a bounded number of leaves), validation, bottom-up
/// enumeration, tree compression and the path-intersection adjacency oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rdv {

/// Host-tree node id, 0-based in memory (the text format is 1-based).
using NodeId = std::int32_t;
/// Graph vertex id, 0-based in memory; equals input order.
using VertexId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

struct NodeCoords;

/// Rooted ordered tree given by a parent array. Children of a node are kept
/// in ascending id order, which is their first-appearance order in the
/// parent array.
///
/// A HostTree may be malformed (several roots, cycles, parent ids out of
/// range); such trees are still representable so validate_instance can
/// report what is wrong with them.
class HostTree {
public:
    HostTree() = default;
    explicit HostTree(std::vector<NodeId> parents);

    std::size_t size() const { return parent_.size(); }
    NodeId parent(NodeId v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeId>& children(NodeId v) const { return children_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeId>& parents() const { return parent_; }

    /// The unique parentless node, if there is exactly one.
    std::optional<NodeId> root() const;

    bool contains(NodeId v) const { return v >= 0 && static_cast<std::size_t>(v) < parent_.size(); }

    bool operator==(const HostTree& other) const { return parent_ == other.parent_; }

private:
    std::vector<NodeId> parent_;
    std::vector<std::vector<NodeId>> children_;
};

struct VertexPath {
    NodeId top = 0;
    NodeId bottom = 0;
};

/// T(v) as a top node plus the bottom ends of the root-to-leaf paths that
/// cover it. A plain downward path has exactly one bottom.
struct VertexSubtree {
    NodeId top = 0;
    std::vector<NodeId> bottoms;

    bool operator==(const VertexSubtree&) const = default;
};

struct RdvInstance {
    HostTree tree;
    std::vector<VertexSubtree> vertices;
    int delta = 1;

    std::size_t vertex_count() const { return vertices.size(); }

    /// Only meaningful for delta == 1 instances.
    VertexPath path(VertexId v) const
    {
        const auto& s = vertices[static_cast<std::size_t>(v)];
        return {s.top, s.bottoms.front()};
    }

    bool operator==(const RdvInstance& other) const
    {
        return tree == other.tree && vertices == other.vertices && delta == other.delta;
    }
};

/// Convenience constructor for plain RDV instances.
RdvInstance make_rdv_instance(std::vector<NodeId> parents, const std::vector<VertexPath>& paths);

enum class ViolationKind {
    EmptyTree,
    NoRoot,
    MultipleRoots,
    ParentOutOfRange,
    Cycle,
    BadDelta,
    NodeOutOfRange,
    NoBottoms,
    TooManyBottoms,
    TopNotAncestorOfBottom,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Every violated structural invariant of the instance; empty iff valid.
/// Runs in O(|T| + sum of bottom counts).
std::vector<Violation> validate_instance(const RdvInstance& inst);

/// Throws std::invalid_argument listing the violations if the instance is
/// malformed.
void require_valid(const RdvInstance& inst);

/// Vertices sorted by decreasing depth of their top node, ties by ascending
/// vertex id. Bucket sort, O(|T| + n).
std::vector<VertexId> bottom_up_order(const RdvInstance& inst, const NodeCoords& coords);

/// True iff T(v_i) and T(v_j) share a host-tree node. Walks parent pointers
/// only; deliberately independent of coordinates. O(depth * delta^2).
bool adjacency_oracle(const RdvInstance& inst, VertexId i, VertexId j);

/// Explicit neighbour lists (ascending) built with adjacency_oracle.
/// Quadratic in n; for verification and the slow greedy path only.
std::vector<std::vector<VertexId>> oracle_adjacency(const RdvInstance& inst);

/// Number of edges of the represented graph, via adjacency_oracle.
std::size_t oracle_edge_count(const RdvInstance& inst);

/// Equivalent instance with no parent/child pair used by the same vertex
/// set and no node subtree that is used by nobody. Vertex ids are kept;
/// node ids are relabelled in preorder.
RdvInstance compress_tree(const RdvInstance& inst);

}  // namespace rdv
