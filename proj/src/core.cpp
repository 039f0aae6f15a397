#include "rdv/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rdv/geometry.hpp"
#include "tree_order.hpp"

namespace rdv {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

// 1-based id for messages.
std::string ext(std::int32_t v) { return std::to_string(static_cast<long long>(v) + 1); }

// Is u on the downward path top..bottom? Walks parents from bottom.
bool on_path(const HostTree& tree, NodeId u, NodeId top, NodeId bottom)
{
    for (NodeId cur = bottom; cur != kNoNode; cur = tree.parent(cur)) {
        if (cur == u)
            return true;
        if (cur == top)
            return false;
    }
    return false;
}

bool paths_meet(const HostTree& tree, NodeId top_a, NodeId bottom_a, NodeId top_b, NodeId bottom_b)
{
    // The topmost common node of two downward paths is one of the two tops.
    return on_path(tree, top_b, top_a, bottom_a) || on_path(tree, top_a, top_b, bottom_b);
}

}  // namespace

namespace detail {

TreeOrder compute_tree_order(const HostTree& tree, NodeId root)
{
    const std::size_t n = tree.size();
    TreeOrder out;
    out.tin.assign(n, -1);
    out.tout.assign(n, -1);
    out.depth.assign(n, 0);
    out.preorder.reserve(n);

    // Explicit stack of (node, next child index).
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(root, 0);
    out.tin[idx(root)] = 0;
    out.preorder.push_back(root);
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        const auto& kids = tree.children(node);
        if (next < kids.size()) {
            NodeId c = kids[next++];
            if (out.tin[idx(c)] != -1)
                continue;  // only reachable on malformed input
            out.tin[idx(c)] = static_cast<std::int32_t>(out.preorder.size());
            out.depth[idx(c)] = out.depth[idx(node)] + 1;
            out.preorder.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            out.tout[idx(node)] = static_cast<std::int32_t>(out.preorder.size()) - 1;
            stack.pop_back();
        }
    }
    return out;
}

NodeId naive_lca(const HostTree& tree, const TreeOrder& order, NodeId a, NodeId b)
{
    while (order.depth[idx(a)] > order.depth[idx(b)])
        a = tree.parent(a);
    while (order.depth[idx(b)] > order.depth[idx(a)])
        b = tree.parent(b);
    while (a != b) {
        a = tree.parent(a);
        b = tree.parent(b);
    }
    return a;
}

}  // namespace detail

HostTree::HostTree(std::vector<NodeId> parents)
    : parent_(std::move(parents)), children_(parent_.size())
{
    for (std::size_t c = 0; c < parent_.size(); ++c) {
        NodeId p = parent_[c];
        if (contains(p) && idx(p) != c)
            children_[idx(p)].push_back(static_cast<NodeId>(c));
    }
}

std::optional<NodeId> HostTree::root() const
{
    std::optional<NodeId> found;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
        if (parent_[v] != kNoNode)
            continue;
        if (found)
            return std::nullopt;
        found = static_cast<NodeId>(v);
    }
    return found;
}

RdvInstance make_rdv_instance(std::vector<NodeId> parents, const std::vector<VertexPath>& paths)
{
    RdvInstance inst;
    inst.tree = HostTree(std::move(parents));
    inst.delta = 1;
    inst.vertices.reserve(paths.size());
    for (const auto& p : paths)
        inst.vertices.push_back({p.top, {p.bottom}});
    return inst;
}

std::vector<Violation> validate_instance(const RdvInstance& inst)
{
    std::vector<Violation> out;
    const HostTree& tree = inst.tree;
    const std::size_t n_nodes = tree.size();

    bool tree_ok = true;
    if (n_nodes == 0) {
        out.push_back({ViolationKind::EmptyTree, "host tree has no nodes"});
        tree_ok = false;
    }

    std::vector<NodeId> roots;
    for (std::size_t v = 0; v < n_nodes; ++v) {
        NodeId p = tree.parents()[v];
        if (p == kNoNode) {
            roots.push_back(static_cast<NodeId>(v));
        } else if (!tree.contains(p)) {
            out.push_back({ViolationKind::ParentOutOfRange,
                           "node " + ext(static_cast<NodeId>(v)) + ": parent " + ext(p) + " out of range"});
            tree_ok = false;
        } else if (idx(p) == v) {
            out.push_back({ViolationKind::Cycle, "node " + ext(p) + " is its own parent"});
            tree_ok = false;
        }
    }
    if (n_nodes > 0 && roots.empty()) {
        out.push_back({ViolationKind::NoRoot, "no root: every node has a parent"});
        tree_ok = false;
    } else if (roots.size() > 1) {
        std::ostringstream msg;
        msg << "multiple roots:";
        for (NodeId r : roots)
            msg << ' ' << ext(r);
        out.push_back({ViolationKind::MultipleRoots, msg.str()});
        tree_ok = false;
    }

    detail::TreeOrder order;
    if (tree_ok) {
        order = detail::compute_tree_order(tree, roots.front());
        if (order.preorder.size() != n_nodes) {
            std::ostringstream msg;
            msg << "nodes not reachable from root (cycle):";
            for (std::size_t v = 0; v < n_nodes; ++v)
                if (order.tin[v] == -1)
                    msg << ' ' << ext(static_cast<NodeId>(v));
            out.push_back({ViolationKind::Cycle, msg.str()});
            tree_ok = false;
        }
    }

    if (inst.delta < 1)
        out.push_back({ViolationKind::BadDelta, "delta must be positive, got " + std::to_string(inst.delta)});

    for (std::size_t i = 0; i < inst.vertices.size(); ++i) {
        const auto& v = inst.vertices[i];
        const std::string who = "vertex " + ext(static_cast<VertexId>(i));
        bool nodes_ok = true;
        if (!tree.contains(v.top)) {
            out.push_back({ViolationKind::NodeOutOfRange, who + ": top " + ext(v.top) + " out of range"});
            nodes_ok = false;
        }
        if (v.bottoms.empty())
            out.push_back({ViolationKind::NoBottoms, who + ": no bottom node"});
        if (inst.delta >= 1 && v.bottoms.size() > static_cast<std::size_t>(inst.delta))
            out.push_back({ViolationKind::TooManyBottoms, who + ": " + std::to_string(v.bottoms.size()) +
                                                              " bottoms exceed delta " + std::to_string(inst.delta)});
        for (NodeId b : v.bottoms) {
            if (!tree.contains(b)) {
                out.push_back({ViolationKind::NodeOutOfRange, who + ": bottom " + ext(b) + " out of range"});
                nodes_ok = false;
            }
        }
        if (!tree_ok || !nodes_ok)
            continue;
        for (NodeId b : v.bottoms)
            if (!order.is_ancestor_or_self(v.top, b))
                out.push_back({ViolationKind::TopNotAncestorOfBottom,
                               who + ": top not ancestor of bottom (top " + ext(v.top) + ", bottom " + ext(b) + ")"});
    }
    return out;
}

void require_valid(const RdvInstance& inst)
{
    auto violations = validate_instance(inst);
    if (violations.empty())
        return;
    std::string msg = "invalid instance:";
    for (const auto& v : violations)
        msg += "\n  " + v.message;
    throw std::invalid_argument(msg);
}

std::vector<VertexId> bottom_up_order(const RdvInstance& inst, const NodeCoords& coords)
{
    const std::size_t n = inst.vertices.size();
    std::int32_t max_depth = 0;
    for (const auto& v : inst.vertices)
        max_depth = std::max(max_depth, coords.y[idx(v.top)]);

    // Counting sort on depth, deepest bucket first; stable in vertex id.
    std::vector<std::size_t> start(idx(max_depth) + 2, 0);
    for (const auto& v : inst.vertices)
        ++start[idx(max_depth - coords.y[idx(v.top)]) + 1];
    for (std::size_t b = 1; b < start.size(); ++b)
        start[b] += start[b - 1];
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto bucket = idx(max_depth - coords.y[idx(inst.vertices[i].top)]);
        order[start[bucket]++] = static_cast<VertexId>(i);
    }
    return order;
}

bool adjacency_oracle(const RdvInstance& inst, VertexId i, VertexId j)
{
    if (i == j)
        throw std::invalid_argument("adjacency_oracle: i == j");
    const auto& a = inst.vertices.at(idx(i));
    const auto& b = inst.vertices.at(idx(j));
    for (NodeId ba : a.bottoms)
        for (NodeId bb : b.bottoms)
            if (paths_meet(inst.tree, a.top, ba, b.top, bb))
                return true;
    return false;
}

std::vector<std::vector<VertexId>> oracle_adjacency(const RdvInstance& inst)
{
    const auto n = static_cast<VertexId>(inst.vertices.size());
    std::vector<std::vector<VertexId>> adj(idx(n));
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (adjacency_oracle(inst, i, j)) {
                adj[idx(i)].push_back(j);
                adj[idx(j)].push_back(i);
            }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

std::size_t oracle_edge_count(const RdvInstance& inst)
{
    const auto n = static_cast<VertexId>(inst.vertices.size());
    std::size_t m = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            m += adjacency_oracle(inst, i, j) ? 1 : 0;
    return m;
}

RdvInstance compress_tree(const RdvInstance& inst)
{
    require_valid(inst);
    const HostTree& tree = inst.tree;
    const std::size_t n_nodes = tree.size();
    const NodeId root = *tree.root();
    const auto order = detail::compute_tree_order(tree, root);

    // use[u] = number of vertices whose subtree contains u, via difference
    // counts summed over subtrees: +1 per distinct bottom, -1 at the LCA of
    // preorder-consecutive bottoms, -1 above the top.
    std::vector<std::int64_t> use(n_nodes, 0);
    std::vector<char> top_here(n_nodes, 0);
    for (const auto& v : inst.vertices) {
        top_here[idx(v.top)] = 1;
        std::vector<NodeId> bs = v.bottoms;
        std::sort(bs.begin(), bs.end(), [&](NodeId a, NodeId b) { return order.tin[idx(a)] < order.tin[idx(b)]; });
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        for (std::size_t k = 0; k < bs.size(); ++k) {
            ++use[idx(bs[k])];
            if (k > 0)
                --use[idx(detail::naive_lca(tree, order, bs[k - 1], bs[k]))];
        }
        if (NodeId p = tree.parent(v.top); p != kNoNode)
            --use[idx(p)];
    }
    std::vector<char> subtree_used(n_nodes, 0);
    for (auto it = order.preorder.rbegin(); it != order.preorder.rend(); ++it) {
        NodeId u = *it;
        NodeId p = tree.parent(u);
        subtree_used[idx(u)] = subtree_used[idx(u)] || use[idx(u)] > 0;
        if (p != kNoNode) {
            use[idx(p)] += use[idx(u)];
            subtree_used[idx(p)] = subtree_used[idx(p)] || subtree_used[idx(u)];
        }
    }

    // Walk in preorder so a parent's representative is known before its
    // children. A node is dropped with its unused subtree, merged into its
    // parent when both are used by the same vertices, or kept.
    std::vector<NodeId> rep(n_nodes, kNoNode);
    std::vector<NodeId> new_parents;
    for (NodeId u : order.preorder) {
        NodeId p = tree.parent(u);
        if (p == kNoNode) {
            rep[idx(u)] = 0;
            new_parents.push_back(kNoNode);
            continue;
        }
        if (!subtree_used[idx(u)])
            continue;
        if (!top_here[idx(u)] && use[idx(u)] == use[idx(p)]) {
            rep[idx(u)] = rep[idx(p)];
        } else {
            rep[idx(u)] = static_cast<NodeId>(new_parents.size());
            new_parents.push_back(rep[idx(p)]);
        }
    }

    RdvInstance out;
    out.tree = HostTree(std::move(new_parents));
    out.delta = inst.delta;
    out.vertices.reserve(inst.vertices.size());
    for (const auto& v : inst.vertices) {
        VertexSubtree w;
        w.top = rep[idx(v.top)];
        for (NodeId b : v.bottoms) {
            NodeId nb = rep[idx(b)];
            if (std::find(w.bottoms.begin(), w.bottoms.end(), nb) == w.bottoms.end())
                w.bottoms.push_back(nb);
        }
        out.vertices.push_back(std::move(w));
    }
    return out;
}

}  // namespace rdv
