#include "rdv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rdv/matching.hpp"

namespace rdv {

bool CrosscheckReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CrosscheckReport crosscheck(const RdvInstance& inst, std::size_t bound)
{
    CrosscheckReport report;
    auto add = [&](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };
    try {
        auto violations = validate_instance(inst);
        add("valid_instance", violations.empty(), violations.empty() ? "" : violations.front().message);
        if (!violations.empty())
            return report;

        const Matching m = inst.delta == 1 ? delayed_greedy(inst) : delayed_greedy_delta(inst);
        const Adjacency adj = oracle_adjacency(inst);
        add("valid_matching", is_valid_matching(adj, m));
        add("maximal_matching", is_maximal_matching(adj, m));
        if (inst.delta == 1 && inst.vertex_count() <= bound) {
            const auto exact = maximum_matching_oracle(adj, bound).size;
            add("maximum_size", exact == m.size(),
                "fast " + std::to_string(m.size()) + " vs exact " + std::to_string(exact));
        }
    } catch (const std::exception& e) {
        add("no_exception", false, e.what());
    }
    return report;
}

std::vector<CrosscheckReport> crosscheck_sweep(std::size_t count,
                                               const std::function<RdvInstance(std::size_t)>& make,
                                               std::size_t bound, unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<CrosscheckReport> reports(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                reports[i] = crosscheck(make(i), bound);
            } catch (const std::exception& e) {
                reports[i].checks.push_back({"generate", false, e.what()});
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    return reports;
}

std::int64_t median_ns(std::vector<std::int64_t> samples)
{
    if (samples.empty())
        throw std::invalid_argument("median_ns: no samples");
    auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

std::vector<BenchRecord> bench_sweep(const BenchConfig& cfg)
{
    if (cfg.min_exp < 1 || cfg.max_exp > 30 || cfg.min_exp > cfg.max_exp || cfg.repeats < 1)
        throw std::invalid_argument("bench_sweep: bad exponent range or repeat count");

    std::vector<BenchRecord> out;
    for (int k = cfg.min_exp; k <= cfg.max_exp; ++k) {
        const auto n = std::int32_t{1} << k;
        RdvInstance inst;
        std::uint64_t seed = 0;
        if (cfg.family == BenchFamily::Dense) {
            inst = gen_dense(n);
        } else {
            seed = cfg.seed + static_cast<std::uint64_t>(k);
            GenConfig g;
            g.seed = seed;
            g.tree_nodes = n;
            g.n_vertices = n;
            g.max_branching = 3;
            inst = gen_random(g);
        }

        BenchRecord rec;
        rec.n = n;
        rec.tree_nodes = static_cast<std::int64_t>(inst.tree.size());
        if (n <= cfg.edge_count_limit)
            rec.edge_count = static_cast<std::int64_t>(oracle_edge_count(inst));
        rec.algo = "delayed_greedy";
        rec.seed = seed;

        std::vector<std::int64_t> samples;
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            auto start = std::chrono::steady_clock::now();
            Matching m = delayed_greedy(inst);
            auto stop = std::chrono::steady_clock::now();
            samples.push_back(
                std::max<std::int64_t>(1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
            rec.matching_size = static_cast<std::int64_t>(m.size());
        }
        rec.wall_time_ns = median_ns(std::move(samples));
        out.push_back(std::move(rec));
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, int repeats)
{
    out << "# median_ns: wall-clock (steady_clock) time of the matching call only, median of " << repeats
        << " repeats; instance generation excluded\n";
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.tree_nodes << ',';
        if (r.edge_count)
            out << *r.edge_count;
        else
            out << "not materialized";
        out << ',' << r.algo << ',' << r.wall_time_ns << ',' << r.matching_size << ',' << r.seed << '\n';
    }
}

}  // namespace rdv
