#include <gtest/gtest.h>

#include <random>

#include "rdv/rayshoot.hpp"
#include "support.hpp"

namespace rdv {
namespace {

TEST(RayShootIndex, EmptyIndexMisses)
{
    RayShootIndex idx(8, 4);
    EXPECT_EQ(idx.size(), 0u);
    EXPECT_FALSE(idx.shoot({3, 100}).has_value());
}

TEST(RayShootIndex, InsertDeleteReinsert)
{
    RayShootIndex idx(8, 4);
    HSegment s{2, 5, 1, 8};
    idx.insert(s);
    EXPECT_EQ(idx.size(), 1u);
    EXPECT_TRUE(idx.contains(2));
    idx.erase(2);
    EXPECT_FALSE(idx.shoot({4, 10}).has_value());
    EXPECT_FALSE(idx.contains(2));
    idx.insert(s);
    ASSERT_TRUE(idx.shoot({4, 10}).has_value());
    EXPECT_EQ(idx.shoot({4, 10})->owner, 2);
}

TEST(RayShootIndex, FirstHitIsHighestBelowOrigin)
{
    RayShootIndex idx(8, 4);
    idx.insert({0, 5, 2, 6});
    idx.insert({1, 9, 3, 4});
    idx.insert({2, 11, 1, 8});
    EXPECT_EQ(idx.shoot({3, 10})->owner, 1);
    EXPECT_EQ(idx.shoot({5, 10})->owner, 0);
    EXPECT_EQ(idx.shoot({3, 11})->owner, 2);
    EXPECT_FALSE(idx.shoot({7, 10}).has_value());
    EXPECT_FALSE(idx.shoot({3, 4}).has_value());
    idx.erase(1);
    EXPECT_EQ(idx.shoot({3, 10})->owner, 0);
}

TEST(RayShootIndex, ContractViolationsAreReported)
{
    RayShootIndex idx(4, 3);
    idx.insert({0, 5, 1, 2});
    EXPECT_THROW(idx.insert({0, 6, 1, 2}), std::invalid_argument);
    EXPECT_THROW(idx.insert({1, 5, 1, 2}), std::invalid_argument);  // height clash
    EXPECT_FALSE(idx.contains(1));
    EXPECT_EQ(idx.shoot({3, 100}), std::nullopt);  // rolled back
    EXPECT_THROW(idx.erase(2), std::invalid_argument);
    EXPECT_THROW(idx.insert({7, 1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(idx.insert({1, 1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(idx.insert({1, 1, 2, 5}), std::invalid_argument);
    EXPECT_THROW(RayShootIndex(0, 1), std::invalid_argument);
    // Disjoint x-ranges may share a height.
    idx.insert({1, 5, 3, 4});
    EXPECT_EQ(idx.size(), 2u);
}

TEST(RayShootIndex, ManyInsertsMatchShadowCount)
{
    const std::size_t count = 10000;
    RayShootIndex idx(1000, count);
    std::mt19937_64 rng(7);
    std::set<VertexId> shadow;
    for (std::size_t k = 0; k < count; ++k) {
        std::int32_t lo = std::uniform_int_distribution<std::int32_t>(1, 1000)(rng);
        std::int32_t hi = std::uniform_int_distribution<std::int32_t>(lo, 1000)(rng);
        idx.insert({static_cast<VertexId>(k), static_cast<std::int64_t>(k) + 1, lo, hi});
        shadow.insert(static_cast<VertexId>(k));
    }
    EXPECT_EQ(idx.size(), shadow.size());
}

// Randomised insert/erase/shoot sequences replayed against a linear scan.
TEST(RayShootIndex, MatchesLinearScanShadow)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng(seed);
        const std::int32_t width = std::uniform_int_distribution<std::int32_t>(1, 64)(rng);
        const std::size_t capacity = 200;
        RayShootIndex idx(width, capacity);
        std::vector<std::optional<HSegment>> shadow(capacity);
        std::vector<std::int64_t> height(capacity);
        for (std::size_t k = 0; k < capacity; ++k)
            height[k] = static_cast<std::int64_t>(k) * 3 + 1;
        std::shuffle(height.begin(), height.end(), rng);

        auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
        for (int step = 0; step < 3000; ++step) {
            auto owner = static_cast<VertexId>(uni(0, capacity - 1));
            auto op = uni(0, 2);
            if (op == 0 && !shadow[static_cast<std::size_t>(owner)]) {
                auto lo = static_cast<std::int32_t>(uni(1, width));
                auto hi = static_cast<std::int32_t>(uni(lo, width));
                HSegment s{owner, height[static_cast<std::size_t>(owner)], lo, hi};
                idx.insert(s);
                shadow[static_cast<std::size_t>(owner)] = s;
            } else if (op == 1 && shadow[static_cast<std::size_t>(owner)]) {
                idx.erase(owner);
                shadow[static_cast<std::size_t>(owner)].reset();
            } else {
                RayQuery q{static_cast<std::int32_t>(uni(0, width + 1)), uni(0, 3 * static_cast<std::int64_t>(capacity) + 2)};
                std::vector<HSegment> live;
                for (const auto& s : shadow)
                    if (s)
                        live.push_back(*s);
                auto expect = testing::linear_scan_shoot(live, q);
                auto got = idx.shoot(q);
                ASSERT_EQ(got.has_value(), expect.has_value()) << "seed " << seed << " step " << step;
                if (got)
                    ASSERT_EQ(got->owner, expect->owner);
            }
        }
    }
}

}  // namespace
}  // namespace rdv
