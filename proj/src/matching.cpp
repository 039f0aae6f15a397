#include "rdv/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdv/geometry.hpp"
#include "rdv/rayshoot.hpp"

namespace rdv {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

// Processed-but-unmatched vertices, stored as their horizontal segments.
class FreeSet {
public:
    FreeSet(const NodeCoords& coords, std::vector<HSegment> segments)
        : segments_(std::move(segments)), index_(std::max(coords.leaf_count, 1), segments_.size())
    {
    }

    void add(VertexId v) { index_.insert(segments_[idx(v)]); }
    void remove(VertexId v) { index_.erase(v); }

    // Free vertex whose segment is hit first by any of the rays, i.e. the
    // highest hit. Among same-depth candidates that is the earliest in the
    // processing order.
    template <typename Rays>
    std::optional<VertexId> nearest(const Rays& rays) const
    {
        std::optional<HSegment> best;
        for (const RayQuery& q : rays) {
            auto hit = index_.shoot(q);
            if (hit && (!best || hit->ys > best->ys))
                best = hit;
        }
        if (!best)
            return std::nullopt;
        return best->owner;
    }

private:
    std::vector<HSegment> segments_;
    RayShootIndex index_;
};

Matching run_delayed(const RdvInstance& inst)
{
    const NodeCoords coords = assign_coordinates(inst.tree);
    const std::vector<VertexId> order = bottom_up_order(inst, coords);
    FreeSet free(coords, build_segments(inst, coords, order));

    Matching m;
    std::vector<RayQuery> rays;
    for (VertexId j : order) {
        rays.clear();
        for (NodeId b : inst.vertices[idx(j)].bottoms)
            rays.push_back(build_ray(inst, coords, j, b));
        if (auto i = free.nearest(rays)) {
            m.pairs.emplace_back(*i, j);
            free.remove(*i);
        } else {
            free.add(j);
        }
    }
    return m;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> Matching::normalized() const
{
    auto out = pairs;
    for (auto& [a, b] : out)
        if (a > b)
            std::swap(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

Matching greedy_reference(const Adjacency& adj, std::span<const VertexId> order)
{
    const std::size_t n = adj.size();
    if (order.size() != n)
        throw std::invalid_argument("greedy_reference: order is not a permutation of the vertices");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto v = order[k];
        if (v < 0 || idx(v) >= n || pos[idx(v)] != n)
            throw std::invalid_argument("greedy_reference: order is not a permutation of the vertices");
        pos[idx(v)] = k;
    }

    std::vector<char> matched(n, 0);
    Matching m;
    for (VertexId v : order) {
        if (matched[idx(v)])
            continue;
        std::optional<VertexId> pick;
        for (VertexId w : adj[idx(v)])
            if (!matched[idx(w)] && w != v && (!pick || pos[idx(w)] < pos[idx(*pick)]))
                pick = w;
        if (pick) {
            matched[idx(v)] = matched[idx(*pick)] = 1;
            m.pairs.emplace_back(v, *pick);
        }
    }
    return m;
}

Matching delayed_greedy(const RdvInstance& inst)
{
    require_valid(inst);
    if (inst.delta != 1)
        throw std::invalid_argument("delayed_greedy: instance has delta " + std::to_string(inst.delta) +
                                    "; use delayed_greedy_delta");
    const NodeCoords coords = assign_coordinates(inst.tree);
    const std::vector<VertexId> order = bottom_up_order(inst, coords);
    FreeSet free(coords, build_segments(inst, coords, order));

    Matching m;
    for (VertexId j : order) {
        const RayQuery ray = build_ray(inst, coords, j, inst.vertices[idx(j)].bottoms.front());
        if (auto i = free.nearest(std::span<const RayQuery>(&ray, 1))) {
            m.pairs.emplace_back(*i, j);
            free.remove(*i);
        } else {
            free.add(j);
        }
    }
    return m;
}

Matching delayed_greedy_delta(const RdvInstance& inst)
{
    require_valid(inst);
    return run_delayed(inst);
}

bool is_valid_matching(const Adjacency& adj, const Matching& m)
{
    std::vector<char> used(adj.size(), 0);
    for (auto [a, b] : m.pairs) {
        if (a < 0 || b < 0 || idx(a) >= adj.size() || idx(b) >= adj.size() || a == b)
            return false;
        if (used[idx(a)] || used[idx(b)])
            return false;
        used[idx(a)] = used[idx(b)] = 1;
        const auto& na = adj[idx(a)];
        if (std::find(na.begin(), na.end(), b) == na.end())
            return false;
    }
    return true;
}

bool is_maximal_matching(const Adjacency& adj, const Matching& m)
{
    std::vector<char> used(adj.size(), 0);
    for (auto [a, b] : m.pairs)
        used[idx(a)] = used[idx(b)] = 1;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (used[v])
            continue;
        for (VertexId w : adj[v])
            if (idx(w) != v && !used[idx(w)])
                return false;
    }
    return true;
}

}  // namespace rdv
