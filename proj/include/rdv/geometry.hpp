#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdv/core.hpp"

namespace rdv {

/// Per-node plane coordinates. Leaves are numbered 1..leaf_count from left
/// to right following the fixed children order.
struct NodeCoords {
    std::vector<std::int32_t> x;  // index of leftmost descendant leaf
    std::vector<std::int32_t> y;  // depth, root = 0
    std::vector<std::int32_t> r;  // index of rightmost descendant leaf
    std::int32_t leaf_count = 0;
};

/// Horizontal segment of a vertex. `ys` is the depth of the vertex's top
/// scaled by n plus a rank-dependent offset in [1, n], which keeps all
/// segments at pairwise distinct heights.
struct HSegment {
    VertexId owner = 0;
    std::int64_t ys = 0;
    std::int32_t x_lo = 0;
    std::int32_t x_hi = 0;

    bool operator==(const HSegment&) const = default;
};

/// Upward ray from below a bottom node. Hits every segment with
/// x_lo <= x <= x_hi and ys <= y_origin.
struct RayQuery {
    std::int32_t x = 0;
    std::int64_t y_origin = 0;
};

/// O(|T|), iterative. The tree must be valid.
NodeCoords assign_coordinates(const HostTree& tree);

/// Segment of the vertex at 1-based position `rank` in `order`.
HSegment build_segment(const RdvInstance& inst, const NodeCoords& coords,
                       std::span<const VertexId> order, std::int32_t rank);

/// Segments for every vertex, indexed by vertex id.
std::vector<HSegment> build_segments(const RdvInstance& inst, const NodeCoords& coords,
                                     std::span<const VertexId> order);

RayQuery build_ray(const RdvInstance& inst, const NodeCoords& coords, VertexId v, NodeId bottom);

/// Lowest scaled height a segment may have and still lie at or below the top
/// of vertex v: y(t(v)) * n + 1.
std::int64_t segment_floor(const RdvInstance& inst, const NodeCoords& coords, VertexId v);

/// Finite vertical segment test: x-stab and floor <= s.ys <= q.y_origin.
bool segment_intersects(const HSegment& s, const RayQuery& q, std::int64_t floor);

}  // namespace rdv
