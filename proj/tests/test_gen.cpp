#include <gtest/gtest.h>

#include <random>

#include "rdv/core.hpp"
#include "rdv/gen.hpp"
#include "rdv/instance_io.hpp"
#include "support.hpp"

namespace rdv {
namespace {

TEST(GenRandom, SingleNodeHostForcesClique)
{
    GenConfig cfg;
    cfg.tree_nodes = 1;
    cfg.n_vertices = 3;
    auto inst = gen_random(cfg);
    EXPECT_EQ(inst.tree.size(), 1u);
    EXPECT_EQ(oracle_edge_count(inst), 3u);
}

TEST(GenRandom, DeterministicInSeed)
{
    for (int delta : {1, 3}) {
        GenConfig cfg;
        cfg.seed = 99;
        cfg.tree_nodes = 40;
        cfg.n_vertices = 25;
        cfg.delta = delta;
        EXPECT_EQ(instance_to_string(gen_random(cfg)), instance_to_string(gen_random(cfg)));
        GenConfig other = cfg;
        other.seed = 100;
        EXPECT_NE(instance_to_string(gen_random(cfg)), instance_to_string(gen_random(other)));
    }
}

TEST(GenRandom, AlwaysValidAndRespectsBranching)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        for (int delta : {1, 2, 5}) {
            auto cfg = testing::mixed_config(seed, 50, delta);
            auto inst = gen_random(cfg);
            ASSERT_TRUE(validate_instance(inst).empty()) << "seed " << seed;
            ASSERT_EQ(inst.tree.size(), static_cast<std::size_t>(cfg.tree_nodes));
            ASSERT_EQ(inst.vertex_count(), static_cast<std::size_t>(cfg.n_vertices));
            for (std::size_t v = 0; v < inst.tree.size(); ++v)
                ASSERT_LE(inst.tree.children(static_cast<NodeId>(v)).size(),
                          static_cast<std::size_t>(cfg.max_branching));
        }
    }
}

TEST(GenRandom, RejectsBadConfig)
{
    GenConfig cfg;
    cfg.n_vertices = 0;
    EXPECT_THROW(gen_random(cfg), std::invalid_argument);
    cfg = {};
    cfg.delta = 0;
    EXPECT_THROW(gen_random(cfg), std::invalid_argument);
}

TEST(GenDense, QuadraticEdgeCount)
{
    EXPECT_GE(oracle_edge_count(gen_dense(4)), 4u);
    EXPECT_GE(oracle_edge_count(gen_dense(64)), 64u * 64u / 8u);
    for (std::int32_t n : {2, 3, 7, 16, 33}) {
        auto inst = gen_dense(n);
        EXPECT_EQ(inst.tree.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(validate_instance(inst).empty());
    }
    // Doubling n multiplies the edge count by roughly four.
    double prev = static_cast<double>(oracle_edge_count(gen_dense(32)));
    for (std::int32_t n : {64, 128, 256}) {
        double cur = static_cast<double>(oracle_edge_count(gen_dense(n)));
        EXPECT_GT(cur / prev, 3.5);
        EXPECT_LT(cur / prev, 4.5);
        prev = cur;
    }
    EXPECT_THROW(gen_dense(1), std::invalid_argument);
}

TEST(IntervalsToRdv, BasicCases)
{
    EXPECT_FALSE(adjacency_oracle(intervals_to_rdv({{1, 2}, {5, 6}}), 0, 1));
    EXPECT_TRUE(adjacency_oracle(intervals_to_rdv({{1, 10}, {3, 4}}), 0, 1));
    EXPECT_TRUE(adjacency_oracle(intervals_to_rdv({{1, 3}, {3, 4}}), 0, 1));  // touching
    EXPECT_THROW(intervals_to_rdv({{4, 3}}), std::invalid_argument);
    EXPECT_TRUE(validate_instance(intervals_to_rdv({})).empty());
}

TEST(IntervalsToRdv, MatchesDirectOverlap)
{
    std::mt19937_64 rng(3);
    std::vector<std::pair<std::int64_t, std::int64_t>> iv;
    for (int k = 0; k < 200; ++k) {
        auto lo = std::uniform_int_distribution<std::int64_t>(-500, 500)(rng);
        iv.emplace_back(lo, lo + std::uniform_int_distribution<std::int64_t>(0, 60)(rng));
    }
    auto inst = intervals_to_rdv(iv);
    ASSERT_TRUE(validate_instance(inst).empty());
    EXPECT_EQ(inst.tree.size(), 400u);
    for (std::size_t i = 0; i < iv.size(); ++i)
        for (std::size_t j = i + 1; j < iv.size(); ++j) {
            bool overlap = std::max(iv[i].first, iv[j].first) <= std::min(iv[i].second, iv[j].second);
            ASSERT_EQ(adjacency_oracle(inst, static_cast<VertexId>(i), static_cast<VertexId>(j)), overlap);
        }
}

TEST(Trampoline, FixtureStructure)
{
    auto t = fixture_trampoline();
    ASSERT_EQ(t.adjacency.size(), 8u);
    auto adjacent = [&](VertexId a, VertexId b) {
        const auto& l = t.adjacency[static_cast<std::size_t>(a)];
        return std::find(l.begin(), l.end(), b) != l.end();
    };
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b)
            EXPECT_FALSE(adjacent(a, b));
    for (VertexId a = 4; a < 8; ++a)
        for (VertexId b = a + 1; b < 8; ++b)
            EXPECT_TRUE(adjacent(a, b));
    for (VertexId a = 0; a < 4; ++a)
        EXPECT_EQ(t.adjacency[static_cast<std::size_t>(a)].size(), 2u);
    EXPECT_EQ(t.order, (std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Trampoline, InstanceIsValidWithDeltaTwo)
{
    auto inst = trampoline_instance();
    EXPECT_TRUE(validate_instance(inst).empty());
    EXPECT_EQ(inst.delta, 2);
}

}  // namespace
}  // namespace rdv
