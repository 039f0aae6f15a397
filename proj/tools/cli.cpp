#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "rdv/bench.hpp"
#include "rdv/core.hpp"
#include "rdv/gen.hpp"
#include "rdv/geometry.hpp"
#include "rdv/instance_io.hpp"
#include "rdv/matching.hpp"

namespace rdv::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Write to the -o path if given, stdout otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
    {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_)
                throw std::runtime_error("cannot write " + path);
        }
        stream_ = file_ ? &*file_ : &fallback;
    }
    std::ostream& get() { return *stream_; }

private:
    std::optional<std::ofstream> file_;
    std::ostream* stream_;
};

int cmd_validate(const std::string& path, std::ostream& out)
{
    const RdvInstance inst = load_instance(path);
    const auto violations = validate_instance(inst);
    for (const auto& v : violations)
        out << v.message << '\n';
    if (violations.empty())
        out << "valid\n";
    return violations.empty() ? kOk : kFailed;
}

int cmd_match(const std::string& path, const std::string& algo, std::ostream& out)
{
    const RdvInstance inst = load_instance(path);
    Matching m;
    if (algo == "delayed") {
        m = delayed_greedy(inst);
    } else if (algo == "delta") {
        m = delayed_greedy_delta(inst);
    } else {
        require_valid(inst);
        const NodeCoords coords = assign_coordinates(inst.tree);
        const auto order = bottom_up_order(inst, coords);
        m = greedy_reference(oracle_adjacency(inst), order);
    }
    write_matching(out, m);
    return kOk;
}

int cmd_oracle(const std::string& path, std::size_t bound, std::ostream& out)
{
    const RdvInstance inst = load_instance(path);
    require_valid(inst);
    out << maximum_matching_oracle(oracle_adjacency(inst), bound).size << '\n';
    return kOk;
}

int cmd_segments(const std::string& path, std::ostream& out)
{
    const RdvInstance inst = load_instance(path);
    require_valid(inst);
    const NodeCoords coords = assign_coordinates(inst.tree);
    const auto order = bottom_up_order(inst, coords);
    for (std::size_t v = 0; v < inst.tree.size(); ++v)
        out << "node " << v + 1 << ' ' << coords.x[v] << ' ' << coords.y[v] << ' ' << coords.r[v] << '\n';
    for (std::size_t rank = 1; rank <= order.size(); ++rank) {
        HSegment s = build_segment(inst, coords, order, static_cast<std::int32_t>(rank));
        out << "seg " << s.owner + 1 << ' ' << s.x_lo << ' ' << s.x_hi << ' ' << s.ys << '\n';
    }
    for (VertexId v : order)
        for (NodeId b : inst.vertices[static_cast<std::size_t>(v)].bottoms) {
            RayQuery q = build_ray(inst, coords, v, b);
            out << "ray " << v + 1 << ' ' << q.x << ' ' << q.y_origin << '\n';
        }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximum matching in RDV graphs from their rooted path representation", "rdvmatch"};
    app.require_subcommand(1, 1);

    std::string input;
    std::string output;

    auto* validate = app.add_subcommand("validate", "Check an instance file; exit 0 iff valid");
    validate->add_option("file", input, "Instance file")->required();

    std::string algo = "delayed";
    auto* match = app.add_subcommand("match", "Print a matching of the represented graph");
    match->add_option("file", input, "Instance file")->required();
    match->add_option("--algo", algo, "delayed | greedy | delta")
        ->check(CLI::IsMember({"delayed", "greedy", "delta"}));

    std::size_t bound = kDefaultOracleBound;
    auto* oracle = app.add_subcommand("oracle", "Print the maximum matching size by exhaustive search");
    oracle->add_option("file", input, "Instance file")->required();
    oracle->add_option("--bound", bound, "Largest vertex count accepted")->check(CLI::Range(1, 64));

    GenConfig gen_cfg;
    bool dense = false;
    auto* gen = app.add_subcommand("gen", "Write a random instance");
    gen->add_option("--seed", gen_cfg.seed, "RNG seed");
    gen->add_option("--tree-nodes", gen_cfg.tree_nodes, "Host tree size")->check(CLI::PositiveNumber);
    gen->add_option("--vertices", gen_cfg.n_vertices, "Vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--delta", gen_cfg.delta, "Maximum bottoms per vertex")->check(CLI::PositiveNumber);
    gen->add_option("--max-branching", gen_cfg.max_branching, "Maximum children per node")
        ->check(CLI::PositiveNumber);
    gen->add_flag("--dense", dense, "Dense path family (ignores tree options)");
    gen->add_option("-o,--output", output, "Output file (default stdout)");

    BenchConfig bench_cfg;
    std::string family = "dense";
    std::int64_t check_limit = 512;
    auto* bench = app.add_subcommand("bench", "Time the matching over n = 2^k and write CSV");
    bench->add_option("--family", family, "dense | random")->check(CLI::IsMember({"dense", "random"}));
    bench->add_option("--min-exp", bench_cfg.min_exp, "Smallest exponent")->check(CLI::Range(1, 30));
    bench->add_option("--max-exp", bench_cfg.max_exp, "Largest exponent")->check(CLI::Range(1, 30));
    bench->add_option("--repeats", bench_cfg.repeats, "Timed runs per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.seed, "Seed for the random family");
    bench->add_option("--edge-limit", bench_cfg.edge_count_limit, "Largest n whose edges are counted");
    bench->add_option("--check-limit", check_limit, "Largest n that is crosschecked against the oracles");
    bench->add_option("-o,--output", output, "CSV file (default stdout)");

    auto* segments = app.add_subcommand("segments", "Dump coordinates, segments and rays");
    segments->add_option("file", input, "Instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate)
            return cmd_validate(input, out);
        if (*match)
            return cmd_match(input, algo, out);
        if (*oracle)
            return cmd_oracle(input, bound, out);
        if (*segments)
            return cmd_segments(input, out);
        if (*gen) {
            gen_cfg.density_mode = dense ? DensityMode::Dense : DensityMode::Sparse;
            const RdvInstance inst = gen_random(gen_cfg);
            Sink sink(output, out);
            write_instance(sink.get(), inst);
            return kOk;
        }
        if (*bench) {
            bench_cfg.family = family == "dense" ? BenchFamily::Dense : BenchFamily::Random;
            const auto records = bench_sweep(bench_cfg);
            int code = kOk;
            for (const auto& r : records) {
                if (r.n > check_limit)
                    continue;
                RdvInstance inst = bench_cfg.family == BenchFamily::Dense
                                       ? gen_dense(static_cast<std::int32_t>(r.n))
                                       : gen_random({r.seed, static_cast<std::int32_t>(r.n),
                                                     static_cast<std::int32_t>(r.n), 3, 1, DensityMode::Sparse});
                for (const auto& c : crosscheck(inst).checks)
                    if (!c.passed) {
                        err << "crosscheck n=" << r.n << ": " << c.name << " failed " << c.detail << '\n';
                        code = kFailed;
                    }
            }
            Sink sink(output, out);
            write_bench_csv(sink.get(), records, bench_cfg.repeats);
            return code;
        }
    } catch (const ParseError& e) {
        err << "error: " << input << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace rdv::cli
