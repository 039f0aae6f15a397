#include <gtest/gtest.h>

#include <sstream>

#include "rdv/bench.hpp"
#include "rdv/gen.hpp"
#include "support.hpp"

namespace rdv {
namespace {

TEST(Crosscheck, TinyInstancesPass)
{
    auto k2 = crosscheck(make_rdv_instance({kNoNode}, {{0, 0}, {0, 0}}));
    EXPECT_TRUE(k2.ok());
    auto edgeless = crosscheck(make_rdv_instance({kNoNode, 0, 0}, {{1, 1}, {2, 2}}));
    EXPECT_TRUE(edgeless.ok());
    bool saw_size_check = false;
    for (const auto& c : edgeless.checks)
        saw_size_check |= c.name == "maximum_size";
    EXPECT_TRUE(saw_size_check);
}

TEST(Crosscheck, InvalidInstanceIsAReportEntry)
{
    auto r = crosscheck(make_rdv_instance({kNoNode, kNoNode}, {{0, 0}}));
    EXPECT_FALSE(r.ok());
    ASSERT_FALSE(r.checks.empty());
    EXPECT_EQ(r.checks.front().name, "valid_instance");
}

TEST(Crosscheck, DeltaInstancesSkipOptimality)
{
    auto r = crosscheck(trampoline_instance());
    EXPECT_TRUE(r.ok());
    for (const auto& c : r.checks)
        EXPECT_NE(c.name, "maximum_size");
}

TEST(CrosscheckSweep, RandomSweepHasNoFailures)
{
    auto reports = crosscheck_sweep(120, [](std::size_t i) { return gen_random(testing::mixed_config(i + 1, 22)); },
                                    24, 2);
    ASSERT_EQ(reports.size(), 120u);
    for (std::size_t i = 0; i < reports.size(); ++i)
        EXPECT_TRUE(reports[i].ok()) << "instance " << i;
}

TEST(BenchSweep, ShapeOfOutput)
{
    BenchConfig cfg;
    cfg.min_exp = 8;
    cfg.max_exp = 9;
    cfg.repeats = 3;
    auto records = bench_sweep(cfg);
    ASSERT_EQ(records.size(), 2u);
    EXPECT_EQ(records[0].n, 256);
    EXPECT_EQ(records[1].n, 512);
    for (const auto& r : records) {
        EXPECT_GT(r.wall_time_ns, 0);
        EXPECT_LE(r.matching_size, r.n / 2);
        EXPECT_EQ(r.tree_nodes, r.n);
        ASSERT_TRUE(r.edge_count.has_value());
    }

    std::ostringstream csv;
    write_bench_csv(csv, records, cfg.repeats);
    std::istringstream lines(csv.str());
    std::string comment, header, row;
    std::getline(lines, comment);
    std::getline(lines, header);
    EXPECT_EQ(comment.front(), '#');
    EXPECT_EQ(header, kBenchCsvHeader);
    int rows = 0;
    while (std::getline(lines, row))
        ++rows;
    EXPECT_EQ(rows, 2);
}

TEST(BenchSweep, LargeSizesAreNotMaterialized)
{
    BenchConfig cfg;
    cfg.family = BenchFamily::Random;
    cfg.min_exp = 6;
    cfg.max_exp = 7;
    cfg.repeats = 1;
    cfg.edge_count_limit = 64;
    auto records = bench_sweep(cfg);
    ASSERT_EQ(records.size(), 2u);
    EXPECT_TRUE(records[0].edge_count.has_value());
    EXPECT_FALSE(records[1].edge_count.has_value());
    std::ostringstream csv;
    write_bench_csv(csv, records, 1);
    EXPECT_NE(csv.str().find("not materialized"), std::string::npos);
    EXPECT_THROW(bench_sweep({BenchFamily::Dense, 5, 4, 1, 1, 0}), std::invalid_argument);
}

TEST(MedianNs, OddEvenEmpty)
{
    EXPECT_EQ(median_ns({5, 1, 3}), 3);
    EXPECT_EQ(median_ns({4, 1, 3, 2}), 3);
    EXPECT_THROW(median_ns({}), std::invalid_argument);
}

}  // namespace
}  // namespace rdv
