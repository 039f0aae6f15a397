#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rdv/bench.hpp"
#include "rdv/core.hpp"
#include "rdv/gen.hpp"
#include "rdv/geometry.hpp"
#include "rdv/instance_io.hpp"
#include "rdv/matching.hpp"
#include "rdv/rayshoot.hpp"

namespace py = pybind11;
using namespace rdv;

namespace {

using VertexSpec = std::pair<NodeId, std::vector<NodeId>>;

RdvInstance make_instance(std::vector<NodeId> parents, const std::vector<VertexSpec>& vertices, int delta)
{
    RdvInstance inst;
    inst.tree = HostTree(std::move(parents));
    inst.delta = delta;
    for (const auto& [top, bottoms] : vertices)
        inst.vertices.push_back({top, bottoms});
    return inst;
}

std::vector<std::pair<VertexId, VertexId>> pairs(const Matching& m) { return m.normalized(); }

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = R"pbdoc(
        Maximum matching in RDV graphs
        ------------------------------

        Ids are 0-based; a parent of -1 marks the root. The text format
        handled by Instance.parse / Instance.load / Instance.to_text is
        1-based.
    )pbdoc";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<RdvInstance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("parents"), py::arg("vertices"), py::arg("delta") = 1,
             "Build from a parent array and (top, [bottoms]) pairs.")
        .def_static("parse", &parse_instance_string, py::arg("text"))
        .def_static("load", &load_instance, py::arg("path"))
        .def("to_text", &instance_to_string)
        .def_property_readonly("parents", [](const RdvInstance& i) { return i.tree.parents(); })
        .def_property_readonly("vertices",
                               [](const RdvInstance& i) {
                                   std::vector<VertexSpec> out;
                                   for (const auto& v : i.vertices)
                                       out.emplace_back(v.top, v.bottoms);
                                   return out;
                               })
        .def_readonly("delta", &RdvInstance::delta)
        .def("__len__", &RdvInstance::vertex_count)
        .def("__eq__", [](const RdvInstance& a, const RdvInstance& b) { return a == b; })
        .def("__repr__", [](const RdvInstance& i) {
            std::ostringstream s;
            s << "<Instance nodes=" << i.tree.size() << " vertices=" << i.vertices.size() << " delta=" << i.delta
              << '>';
            return s.str();
        });

    m.def("validate", [](const RdvInstance& inst) {
        std::vector<std::string> out;
        for (const auto& v : validate_instance(inst))
            out.push_back(v.message);
        return out;
    }, "Violation messages; empty iff the instance is well-formed.");

    m.def("assign_coordinates", [](const RdvInstance& inst) {
        NodeCoords c = assign_coordinates(inst.tree);
        py::dict d;
        d["x"] = c.x;
        d["y"] = c.y;
        d["r"] = c.r;
        d["leaf_count"] = c.leaf_count;
        return d;
    });
    m.def("bottom_up_order", [](const RdvInstance& inst) {
        require_valid(inst);
        return bottom_up_order(inst, assign_coordinates(inst.tree));
    });
    m.def("adjacency_oracle", &adjacency_oracle, py::arg("inst"), py::arg("i"), py::arg("j"));
    m.def("oracle_adjacency", &oracle_adjacency);
    m.def("compress_tree", &compress_tree);

    m.def("delayed_greedy", [](const RdvInstance& inst) { return pairs(delayed_greedy(inst)); },
          "Maximum matching as sorted (i, j) pairs with i < j.");
    m.def("delayed_greedy_delta", [](const RdvInstance& inst) { return pairs(delayed_greedy_delta(inst)); });
    m.def("greedy_reference",
          [](const Adjacency& adj, const std::vector<VertexId>& order) { return pairs(greedy_reference(adj, order)); },
          py::arg("adjacency"), py::arg("order"));
    m.def("maximum_matching_oracle",
          [](const Adjacency& adj, std::size_t bound) {
              auto r = maximum_matching_oracle(adj, bound);
              return std::make_pair(r.size, pairs(r.witness));
          },
          py::arg("adjacency"), py::arg("bound") = kDefaultOracleBound);
    m.def("is_simple_vertex", &is_simple_vertex, py::arg("adjacency"), py::arg("v"), py::arg("alive"));

    m.def("gen_random",
          [](std::uint64_t seed, std::int32_t tree_nodes, std::int32_t n_vertices, std::int32_t max_branching,
             std::int32_t delta, bool dense) {
              return gen_random({seed, tree_nodes, n_vertices, max_branching, delta,
                                 dense ? DensityMode::Dense : DensityMode::Sparse});
          },
          py::arg("seed"), py::arg("tree_nodes"), py::arg("n_vertices"), py::arg("max_branching") = 3,
          py::arg("delta") = 1, py::arg("dense") = false);
    m.def("gen_dense", &gen_dense, py::arg("n"));
    m.def("intervals_to_rdv", &intervals_to_rdv, py::arg("intervals"));
    m.def("trampoline_instance", &trampoline_instance);
    m.def("fixture_trampoline", [] {
        Trampoline t = fixture_trampoline();
        return std::make_pair(t.adjacency, t.order);
    });

    m.def("crosscheck", [](const RdvInstance& inst, std::size_t bound) {
        auto report = crosscheck(inst, bound);
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto& c : report.checks)
            checks.emplace_back(c.name, c.passed, c.detail);
        return std::make_pair(report.ok(), checks);
    }, py::arg("inst"), py::arg("bound") = kDefaultOracleBound);

    py::class_<RayShootIndex>(m, "RayShootIndex")
        .def(py::init<std::int32_t, std::size_t>(), py::arg("width"), py::arg("capacity"))
        .def("insert",
             [](RayShootIndex& idx, VertexId owner, std::int64_t ys, std::int32_t x_lo, std::int32_t x_hi) {
                 idx.insert({owner, ys, x_lo, x_hi});
             },
             py::arg("owner"), py::arg("ys"), py::arg("x_lo"), py::arg("x_hi"))
        .def("erase", &RayShootIndex::erase, py::arg("owner"))
        .def("shoot",
             [](const RayShootIndex& idx, std::int32_t x, std::int64_t y_origin) -> std::optional<VertexId> {
                 auto hit = idx.shoot({x, y_origin});
                 if (!hit)
                     return std::nullopt;
                 return hit->owner;
             },
             py::arg("x"), py::arg("y_origin"), "Owner of the first segment hit, or None.")
        .def("__len__", &RayShootIndex::size)
        .def("__contains__", &RayShootIndex::contains);
}
