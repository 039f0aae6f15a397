#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rdv/core.hpp"
#include "rdv/gen.hpp"

namespace rdv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CrosscheckReport {
    std::vector<CheckResult> checks;
    bool ok() const;
};

/// Runs delayed_greedy (or delayed_greedy_delta for delta > 1) and checks
/// the result against the oracle adjacency: validity, maximality and, for
/// plain instances with n <= bound, size equality with the exact oracle.
/// Failures, including exceptions, become report entries.
CrosscheckReport crosscheck(const RdvInstance& inst, std::size_t bound = 24);

/// Crosschecks instances produced by `make(i)` for i in [0, count), spread
/// over `threads` workers (0 = hardware concurrency). Reports come back in
/// index order.
std::vector<CrosscheckReport> crosscheck_sweep(std::size_t count,
                                               const std::function<RdvInstance(std::size_t)>& make,
                                               std::size_t bound = 24, unsigned threads = 0);

enum class BenchFamily { Dense, Random };

struct BenchRecord {
    std::int64_t n = 0;
    std::int64_t tree_nodes = 0;
    std::optional<std::int64_t> edge_count;  // empty: not materialized
    std::string algo;
    std::int64_t wall_time_ns = 0;
    std::int64_t matching_size = 0;
    std::uint64_t seed = 0;
};

struct BenchConfig {
    BenchFamily family = BenchFamily::Dense;
    int min_exp = 10;
    int max_exp = 16;
    int repeats = 5;
    std::uint64_t seed = 1;
    /// Largest n for which edges are counted via the oracle.
    std::int64_t edge_count_limit = 512;
};

/// Median wall time of delayed_greedy for n = 2^k, k in [min_exp, max_exp].
/// Only the matching call is timed. Runs sequentially.
std::vector<BenchRecord> bench_sweep(const BenchConfig& cfg);

/// Median of `samples` (upper median for even counts). Throws on empty.
std::int64_t median_ns(std::vector<std::int64_t> samples);

inline constexpr const char* kBenchCsvHeader = "n,tree_nodes,edges,algo,median_ns,matching_size,seed";

/// One `#` comment line describing the timing, the header, then one row per
/// record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, int repeats);

}  // namespace rdv
