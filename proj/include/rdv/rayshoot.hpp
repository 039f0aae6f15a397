#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rdv/geometry.hpp"

namespace rdv {

/// Dynamic orthogonal ray shooting over horizontal segments with pairwise
/// distinct heights and integer x-coordinates in [1, width].
///
/// Segment tree over x; every node keeps the segments whose canonical
/// decomposition contains it, ordered by height. insert/erase touch
/// O(log width) nodes and shoot inspects one root-to-leaf path, each step a
/// balanced-tree lookup, so all operations are O(log width * log n).
///
/// Owners are vertex ids in [0, capacity).
class RayShootIndex {
public:
    RayShootIndex(std::int32_t width, std::size_t capacity);

    /// Throws std::invalid_argument if the owner is already live or the
    /// segment leaves [1, width]. A height already used by an overlapping
    /// segment is a caller error; it is reported when the two share a
    /// tree node.
    void insert(const HSegment& s);

    /// Throws std::invalid_argument if the owner is not live.
    void erase(VertexId owner);

    /// Live segment stabbed by q.x with the largest ys <= q.y_origin.
    std::optional<HSegment> shoot(const RayQuery& q) const;

    bool contains(VertexId owner) const;
    std::size_t size() const { return live_count_; }
    std::int32_t width() const { return width_; }

private:
    template <typename Fn>
    void for_each_canonical(std::int32_t lo, std::int32_t hi, Fn&& fn);

    void check_owner(VertexId owner) const;

    std::int32_t width_;
    std::size_t leaves_;
    std::vector<std::map<std::int64_t, VertexId>> nodes_;
    std::vector<std::optional<HSegment>> live_;
    std::size_t live_count_ = 0;
};

}  // namespace rdv
