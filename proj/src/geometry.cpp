#include "rdv/geometry.hpp"

#include <stdexcept>

namespace rdv {

namespace {
std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }
}  // namespace

NodeCoords assign_coordinates(const HostTree& tree)
{
    const std::size_t n = tree.size();
    auto root = tree.root();
    if (!root)
        throw std::invalid_argument("assign_coordinates: tree has no unique root");

    NodeCoords c;
    c.x.assign(n, 0);
    c.y.assign(n, 0);
    c.r.assign(n, 0);

    // Post-order via explicit stack; leaves numbered on first visit.
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(*root, 0);
    std::int32_t next_leaf = 0;
    while (!stack.empty()) {
        auto [node, next] = stack.back();
        const auto& kids = tree.children(node);
        if (kids.empty()) {
            c.x[idx(node)] = c.r[idx(node)] = ++next_leaf;
            stack.pop_back();
            continue;
        }
        if (next < kids.size()) {
            ++stack.back().second;
            NodeId child = kids[next];
            c.y[idx(child)] = c.y[idx(node)] + 1;
            stack.emplace_back(child, 0);
        } else {
            c.x[idx(node)] = c.x[idx(kids.front())];
            c.r[idx(node)] = c.r[idx(kids.back())];
            stack.pop_back();
        }
    }
    c.leaf_count = next_leaf;
    return c;
}

HSegment build_segment(const RdvInstance& inst, const NodeCoords& coords,
                       std::span<const VertexId> order, std::int32_t rank)
{
    const auto n = static_cast<std::int64_t>(inst.vertices.size());
    if (rank < 1 || rank > n)
        throw std::out_of_range("build_segment: rank outside [1, n]");
    VertexId v = order[idx(rank - 1)];
    NodeId top = inst.vertices[idx(v)].top;
    HSegment s;
    s.owner = v;
    s.ys = coords.y[idx(top)] * n + (n - rank + 1);
    s.x_lo = coords.x[idx(top)];
    s.x_hi = coords.r[idx(top)];
    return s;
}

std::vector<HSegment> build_segments(const RdvInstance& inst, const NodeCoords& coords,
                                     std::span<const VertexId> order)
{
    std::vector<HSegment> out(inst.vertices.size());
    for (std::size_t rank = 1; rank <= order.size(); ++rank) {
        HSegment s = build_segment(inst, coords, order, static_cast<std::int32_t>(rank));
        out[idx(s.owner)] = s;
    }
    return out;
}

RayQuery build_ray(const RdvInstance& inst, const NodeCoords& coords, VertexId, NodeId bottom)
{
    const auto n = static_cast<std::int64_t>(inst.vertices.size());
    return {coords.x[idx(bottom)], (static_cast<std::int64_t>(coords.y[idx(bottom)]) + 1) * n};
}

std::int64_t segment_floor(const RdvInstance& inst, const NodeCoords& coords, VertexId v)
{
    const auto n = static_cast<std::int64_t>(inst.vertices.size());
    return coords.y[idx(inst.vertices[idx(v)].top)] * n + 1;
}

bool segment_intersects(const HSegment& s, const RayQuery& q, std::int64_t floor)
{
    return s.x_lo <= q.x && q.x <= s.x_hi && floor <= s.ys && s.ys <= q.y_origin;
}

}  // namespace rdv
