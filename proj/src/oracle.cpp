// Exact, slow reference procedures used to verify the fast matching path.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "rdv/matching.hpp"

namespace rdv {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

class BranchAndBound {
public:
    explicit BranchAndBound(const Adjacency& adj) : n_(adj.size()), nbr_(adj.size(), 0)
    {
        for (std::size_t v = 0; v < n_; ++v)
            for (VertexId w : adj[v])
                if (idx(w) != v)
                    nbr_[v] |= std::uint64_t{1} << idx(w);
    }

    OracleResult solve()
    {
        const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        search(all);
        OracleResult out;
        out.size = best_.size();
        out.witness.pairs = best_;
        return out;
    }

private:
    void search(std::uint64_t undecided)
    {
        if (best_.size() == n_ / 2)
            return;
        // Vertices that can still be matched.
        std::uint64_t active = 0;
        for (std::uint64_t rest = undecided; rest; rest &= rest - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(rest));
            if (nbr_[v] & undecided)
                active |= std::uint64_t{1} << v;
        }
        if (current_.size() + static_cast<std::size_t>(std::popcount(active)) / 2 <= best_.size())
            return;
        if (active == 0) {
            if (current_.size() > best_.size())
                best_ = current_;
            return;
        }

        // Branch on the lowest-id vertex that still has a neighbour.
        auto v = static_cast<std::size_t>(std::countr_zero(active));
        const std::uint64_t vbit = std::uint64_t{1} << v;
        for (std::uint64_t cand = nbr_[v] & undecided; cand; cand &= cand - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(cand));
            current_.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
            search(undecided & ~vbit & ~(std::uint64_t{1} << w));
            current_.pop_back();
        }
        search(undecided & ~vbit);
    }

    std::size_t n_;
    std::vector<std::uint64_t> nbr_;
    std::vector<std::pair<VertexId, VertexId>> current_;
    std::vector<std::pair<VertexId, VertexId>> best_;
};

}  // namespace

OracleResult maximum_matching_oracle(const Adjacency& adj, std::size_t bound)
{
    if (bound > 64)
        throw std::invalid_argument("maximum_matching_oracle: bound " + std::to_string(bound) + " exceeds 64");
    if (adj.size() > bound)
        throw std::invalid_argument("maximum_matching_oracle: " + std::to_string(adj.size()) +
                                    " vertices exceed bound " + std::to_string(bound));
    return BranchAndBound(adj).solve();
}

bool is_simple_vertex(const Adjacency& adj, VertexId v, const std::vector<bool>& alive)
{
    auto closed = [&](VertexId u) {
        std::vector<VertexId> out{u};
        for (VertexId w : adj[idx(u)])
            if (alive[idx(w)] && w != u)
                out.push_back(w);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    const std::vector<VertexId> members = closed(v);
    std::vector<std::vector<VertexId>> hoods;
    hoods.reserve(members.size());
    for (VertexId w : members) {
        hoods.push_back(closed(w));
        if (!std::includes(hoods.back().begin(), hoods.back().end(), members.begin(), members.end()))
            return false;  // N[v] is not a clique
    }
    std::sort(hoods.begin(), hoods.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t k = 1; k < hoods.size(); ++k)
        if (!std::includes(hoods[k].begin(), hoods[k].end(), hoods[k - 1].begin(), hoods[k - 1].end()))
            return false;
    return true;
}

}  // namespace rdv
