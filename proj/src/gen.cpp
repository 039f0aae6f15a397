#include "rdv/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "tree_order.hpp"

namespace rdv {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

template <typename Int>
Int uniform(std::mt19937_64& rng, Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

std::vector<NodeId> random_parents(std::mt19937_64& rng, std::int32_t nodes, std::int32_t max_branching)
{
    std::vector<NodeId> parents(idx(nodes), kNoNode);
    std::vector<std::int32_t> child_count(idx(nodes), 0);
    std::vector<NodeId> open{0};  // nodes with spare child slots
    for (NodeId k = 1; k < nodes; ++k) {
        auto slot = uniform<std::size_t>(rng, 0, open.size() - 1);
        NodeId p = open[slot];
        parents[idx(k)] = p;
        if (++child_count[idx(p)] == max_branching) {
            open[slot] = open.back();
            open.pop_back();
        }
        open.push_back(k);
    }
    return parents;
}

}  // namespace

RdvInstance gen_random(const GenConfig& cfg)
{
    if (cfg.tree_nodes < 1 || cfg.n_vertices < 1 || cfg.max_branching < 1 || cfg.delta < 1)
        throw std::invalid_argument("gen_random: counts must be positive");
    if (cfg.density_mode == DensityMode::Dense)
        return gen_dense(cfg.n_vertices);

    std::mt19937_64 rng(cfg.seed);
    RdvInstance inst;
    inst.tree = HostTree(random_parents(rng, cfg.tree_nodes, cfg.max_branching));
    inst.delta = cfg.delta;
    const auto order = detail::compute_tree_order(inst.tree, 0);

    inst.vertices.reserve(idx(cfg.n_vertices));
    for (std::int32_t i = 0; i < cfg.n_vertices; ++i) {
        VertexSubtree v;
        if (cfg.delta == 1) {
            NodeId b = uniform<NodeId>(rng, 0, cfg.tree_nodes - 1);
            auto up = uniform<std::int32_t>(rng, 0, order.depth[idx(b)]);
            NodeId t = b;
            while (up-- > 0)
                t = inst.tree.parent(t);
            v.top = t;
            v.bottoms.push_back(b);
        } else {
            v.top = uniform<NodeId>(rng, 0, cfg.tree_nodes - 1);
            const auto first = order.tin[idx(v.top)];
            const auto last = order.tout[idx(v.top)];
            auto k = uniform<std::int32_t>(rng, 1, cfg.delta);
            while (k-- > 0) {
                NodeId b = order.preorder[idx(uniform<std::int32_t>(rng, first, last))];
                if (std::find(v.bottoms.begin(), v.bottoms.end(), b) == v.bottoms.end())
                    v.bottoms.push_back(b);
            }
        }
        inst.vertices.push_back(std::move(v));
    }
    return inst;
}

RdvInstance gen_dense(std::int32_t n)
{
    if (n < 2)
        throw std::invalid_argument("gen_dense: n must be at least 2");
    std::vector<NodeId> parents(idx(n));
    for (NodeId k = 0; k < n; ++k)
        parents[idx(k)] = k - 1;
    std::vector<VertexPath> paths;
    paths.reserve(idx(n));
    for (std::int32_t i = 1; i <= n; ++i) {
        std::int32_t top = (i + 1) / 2;
        std::int32_t bottom = std::min(n, top + n / 2);
        paths.push_back({top - 1, bottom - 1});
    }
    return make_rdv_instance(std::move(parents), paths);
}

RdvInstance intervals_to_rdv(const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals)
{
    const std::size_t n = intervals.size();
    // (value, 0 = left / 1 = right, interval): left ends sort first on ties so
    // touching closed intervals still overlap.
    std::vector<std::tuple<std::int64_t, int, std::size_t>> ends;
    ends.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [lo, hi] = intervals[i];
        if (lo > hi)
            throw std::invalid_argument("intervals_to_rdv: interval " + std::to_string(i + 1) + " has lo > hi");
        ends.emplace_back(lo, 0, i);
        ends.emplace_back(hi, 1, i);
    }
    std::sort(ends.begin(), ends.end());

    std::vector<VertexPath> paths(n);
    for (std::size_t rank = 0; rank < ends.size(); ++rank) {
        auto [value, side, i] = ends[rank];
        (side == 0 ? paths[i].top : paths[i].bottom) = static_cast<NodeId>(rank);
    }
    const auto nodes = static_cast<NodeId>(std::max<std::size_t>(ends.size(), 1));
    std::vector<NodeId> parents(idx(nodes));
    for (NodeId k = 0; k < nodes; ++k)
        parents[idx(k)] = k - 1;
    return make_rdv_instance(std::move(parents), paths);
}

Trampoline fixture_trampoline()
{
    Trampoline t;
    t.adjacency.resize(8);
    auto edge = [&](VertexId a, VertexId b) {
        t.adjacency[idx(a)].push_back(b);
        t.adjacency[idx(b)].push_back(a);
    };
    for (VertexId a = 4; a < 8; ++a)
        for (VertexId b = a + 1; b < 8; ++b)
            edge(a, b);
    edge(0, 5);
    edge(0, 6);
    edge(1, 4);
    edge(1, 6);
    edge(2, 5);
    edge(2, 7);
    edge(3, 4);
    edge(3, 7);
    for (auto& list : t.adjacency)
        std::sort(list.begin(), list.end());
    t.order = {0, 1, 2, 3, 4, 5, 6, 7};
    return t;
}

RdvInstance trampoline_instance()
{
    // Node 0 is the inner clique; node k in 1..4 is the clique of outer
    // vertex k-1 and its two inner neighbours.
    RdvInstance inst;
    inst.tree = HostTree({kNoNode, 0, 0, 0, 0});
    inst.delta = 2;
    inst.vertices = {
        {1, {1}}, {2, {2}}, {3, {3}}, {4, {4}},
        {0, {2, 4}}, {0, {1, 3}}, {0, {1, 2}}, {0, {3, 4}},
    };
    return inst;
}

}  // namespace rdv
