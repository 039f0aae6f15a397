#include "rdv/rayshoot.hpp"

#include <stdexcept>
#include <string>

namespace rdv {

RayShootIndex::RayShootIndex(std::int32_t width, std::size_t capacity)
    : width_(width), leaves_(1), live_(capacity)
{
    if (width < 1)
        throw std::invalid_argument("RayShootIndex: width must be positive");
    while (leaves_ < static_cast<std::size_t>(width))
        leaves_ <<= 1;
    nodes_.resize(2 * leaves_);
}

template <typename Fn>
void RayShootIndex::for_each_canonical(std::int32_t lo, std::int32_t hi, Fn&& fn)
{
    // Iterative bottom-up decomposition of the closed range [lo, hi].
    std::size_t l = static_cast<std::size_t>(lo - 1) + leaves_;
    std::size_t r = static_cast<std::size_t>(hi - 1) + leaves_ + 1;
    while (l < r) {
        if (l & 1)
            fn(nodes_[l++]);
        if (r & 1)
            fn(nodes_[--r]);
        l >>= 1;
        r >>= 1;
    }
}

void RayShootIndex::check_owner(VertexId owner) const
{
    if (owner < 0 || static_cast<std::size_t>(owner) >= live_.size())
        throw std::invalid_argument("RayShootIndex: owner " + std::to_string(owner) + " outside capacity");
}

void RayShootIndex::insert(const HSegment& s)
{
    check_owner(s.owner);
    if (live_[static_cast<std::size_t>(s.owner)])
        throw std::invalid_argument("RayShootIndex: owner " + std::to_string(s.owner) + " already live");
    if (s.x_lo < 1 || s.x_hi > width_ || s.x_lo > s.x_hi)
        throw std::invalid_argument("RayShootIndex: segment x-range outside index");
    std::vector<std::map<std::int64_t, VertexId>*> touched;
    bool clash = false;
    for_each_canonical(s.x_lo, s.x_hi, [&](auto& node) {
        if (node.emplace(s.ys, s.owner).second)
            touched.push_back(&node);
        else
            clash = true;
    });
    if (clash) {
        for (auto* node : touched)
            node->erase(s.ys);
        throw std::invalid_argument("RayShootIndex: height " + std::to_string(s.ys) + " already taken");
    }
    live_[static_cast<std::size_t>(s.owner)] = s;
    ++live_count_;
}

void RayShootIndex::erase(VertexId owner)
{
    check_owner(owner);
    auto& slot = live_[static_cast<std::size_t>(owner)];
    if (!slot)
        throw std::invalid_argument("RayShootIndex: owner " + std::to_string(owner) + " not live");
    const std::int64_t ys = slot->ys;
    for_each_canonical(slot->x_lo, slot->x_hi, [&](auto& node) { node.erase(ys); });
    slot.reset();
    --live_count_;
}

std::optional<HSegment> RayShootIndex::shoot(const RayQuery& q) const
{
    if (q.x < 1 || q.x > width_)
        return std::nullopt;
    std::optional<std::pair<std::int64_t, VertexId>> best;
    for (std::size_t node = static_cast<std::size_t>(q.x - 1) + leaves_; node >= 1; node >>= 1) {
        const auto& bucket = nodes_[node];
        auto it = bucket.upper_bound(q.y_origin);
        if (it == bucket.begin())
            continue;
        --it;
        if (!best || it->first > best->first)
            best = *it;
    }
    if (!best)
        return std::nullopt;
    return live_[static_cast<std::size_t>(best->second)];
}

bool RayShootIndex::contains(VertexId owner) const
{
    return owner >= 0 && static_cast<std::size_t>(owner) < live_.size() &&
           live_[static_cast<std::size_t>(owner)].has_value();
}

}  // namespace rdv
