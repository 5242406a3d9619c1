#include <vecchoose/constructions.hh>
#include <vecchoose/engine.hh>
#include <vecchoose/errors.hh>
#include <vecchoose/hardness.hh>
#include <vecchoose/io.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

using namespace vecchoose;

namespace
{
    auto scalar_from(const Field & field, const py::handle & value) -> Scalar
    {
        return Scalar::parse(field, py::str(value).cast<std::string>());
    }

    auto vector_from(const Field & field, std::size_t ambient, const py::sequence & row) -> Vector
    {
        if (py::len(row) != ambient)
            throw InvalidParameter("row of length " + std::to_string(py::len(row)) + " in ambient " + std::to_string(ambient));
        std::vector<Scalar> entries;
        for (auto x : row)
            entries.push_back(scalar_from(field, x));
        return Vector(field, std::move(entries));
    }

    auto rows_of(const std::vector<Vector> & vectors) -> py::list
    {
        py::list rows;
        for (auto & v : vectors) {
            py::list row;
            for (auto & x : v.entries())
                row.append(x.to_string());
            rows.append(row);
        }
        return rows;
    }

    auto make_assignment(const Graph & g, const Field & field, std::size_t ambient, const py::sequence & spaces) -> SubspaceAssignment
    {
        SubspaceAssignment a{ g, field, ambient, {} };
        for (auto s : spaces) {
            std::vector<Vector> basis;
            for (auto row : s.cast<py::sequence>())
                basis.push_back(vector_from(field, ambient, row.cast<py::sequence>()));
            a.spaces.push_back(Subspace::span(field, ambient, basis));
        }
        a.validate();
        return a;
    }

    auto choice_from(const SubspaceAssignment & a, const py::sequence & rows) -> Choice
    {
        Choice c;
        for (auto row : rows)
            c.push_back(vector_from(a.field, a.ambient, row.cast<py::sequence>()));
        return c;
    }

    auto certificate_dict(const SearchCertificate & c) -> py::dict
    {
        py::dict d;
        d["verdict"] = verdict_name(c.verdict);
        d["nodes"] = c.nodes;
        d["order"] = c.order;
        d["seed"] = c.seed;
        d["seconds"] = c.seconds;
        d["witness"] = c.witness ? py::object(rows_of(*c.witness)) : py::object(py::none());
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Orthogonal vector choices for subspace assignments";

    py::register_exception<Error>(m, "VecchooseError");

    py::class_<Field>(m, "Field")
        .def_static("prime", &Field::prime)
        .def_static("rationals", &Field::rationals)
        .def_static("parse", &Field::parse)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("is_rationals", &Field::is_rationals)
        .def("__eq__", [] (const Field & a, const Field & b) { return a == b; })
        .def("__str__", &Field::to_string)
        .def("__repr__", [] (const Field & f) { return "Field(" + f.to_string() + ")"; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def("add_vertex", &Graph::add_vertex)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("set_label", &Graph::set_label)
        .def("label", &Graph::label)
        .def_property_readonly("labels", &Graph::labels)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbours", &Graph::neighbours)
        .def("__len__", &Graph::size)
        .def("__eq__", [] (const Graph & a, const Graph & b) { return a == b; })
        .def("to_text", &print_graph)
        .def("to_dot", &print_dot)
        .def_static("from_text", [] (const std::string & text) { return parse_graph(text); });

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("is_bipartite", [] (const Graph & g) { return bipartition(g).bipartite; });

    py::class_<SubspaceAssignment>(m, "Assignment")
        .def(py::init(&make_assignment), py::arg("graph"), py::arg("field"), py::arg("ambient"), py::arg("spaces"),
                "spaces: per vertex, a list of spanning rows (ints or 'a/b' strings)")
        .def_readonly("graph", &SubspaceAssignment::graph)
        .def_readonly("field", &SubspaceAssignment::field)
        .def_readonly("ambient", &SubspaceAssignment::ambient)
        .def("dimensions", &SubspaceAssignment::dimensions)
        .def("basis", [] (const SubspaceAssignment & a, std::size_t v) { return rows_of(a.spaces.at(v).basis()); })
        .def("__eq__", [] (const SubspaceAssignment & a, const SubspaceAssignment & b) { return a == b; })
        .def("to_text", &print_assignment)
        .def_static("from_text", [] (const Graph & g, const std::string & text) { return parse_assignment(g, text); });

    m.def("find_choice", [] (const SubspaceAssignment & a, std::uint64_t node_budget, double time_budget, std::uint64_t seed) {
        SearchOptions options;
        options.node_budget = node_budget;
        options.time_budget_seconds = time_budget;
        options.seed = seed;
        SearchCertificate c;
        {
            py::gil_scoped_release release;
            c = find_choice(a, options);
        }
        return certificate_dict(c);
    }, py::arg("assignment"), py::arg("node_budget") = 0, py::arg("time_budget") = 0.0, py::arg("seed") = 0);

    m.def("verify_choice", [] (const SubspaceAssignment & a, const py::sequence & rows) {
        auto report = verify_choice(a, choice_from(a, rows));
        py::dict d;
        d["valid"] = report.valid;
        d["bad_vertex"] = report.bad_vertex;
        d["bad_edge"] = report.bad_edge;
        d["reason"] = report.reason;
        return d;
    });

    m.def("real_cycle_choice", [] (const SubspaceAssignment & a) {
        auto r = real_cycle_choice(a);
        py::dict d;
        d["exists"] = r.exists;
        d["witness"] = r.witness ? py::object(rows_of(*r.witness)) : py::object(py::none());
        d["polynomial"] = r.obstruction ? py::object(py::str(r.obstruction->polynomial.to_string())) : py::object(py::none());
        return d;
    });

    m.def("cycle_bad_assignment", &cycle_bad_assignment, py::arg("length"), py::arg("field"));
    m.def("adversarial_assignment", [] (const std::string & kind, const Field & field, const std::vector<std::size_t> & params) {
        return adversarial_assignment(parse_adversarial_kind(kind), field, params);
    });

    m.def("projective_plane_partition", [] (std::uint32_t q, const std::vector<std::size_t> & removed) {
        auto p = projective_plane_partition(q, removed);
        py::dict d;
        d["graph"] = p.partition.graph;
        d["k"] = p.partition.k;
        d["parts"] = p.partition.parts;
        d["lines_used"] = p.lines_used;
        d["certified"] = p.certified;
        d["text"] = print_partition(p.partition);
        return d;
    }, py::arg("q"), py::arg("removed") = std::vector<std::size_t>{});

    m.def("check_k_partitioned", [] (const Graph & g, const std::string & partition_text, std::uint64_t budget) {
        auto r = check_k_partitioned_exhaustive(parse_partition(g, partition_text), budget);
        py::dict d;
        d["verdict"] = partition_verdict_name(r.verdict);
        d["refutation"] = r.refutation;
        d["examined"] = r.examined;
        return d;
    }, py::arg("graph"), py::arg("partition_text"), py::arg("budget") = 10'000'000);

    py::class_<ReductionOutput>(m, "Reduction")
        .def(py::init([] (const std::string & dimacs) { return build_reduction(parse_dimacs(dimacs)); }), py::arg("dimacs"))
        .def_readonly("graph", &ReductionOutput::graph)
        .def_readonly("f", &ReductionOutput::f)
        .def_readonly("clause_vertices", &ReductionOutput::clause_vertices)
        .def("forcing_assignment", [] (const ReductionOutput & r, const Field & field) { return reduction_unsat_assignment(r, field); })
        .def("satisfied_by", [] (const ReductionOutput & r, const std::vector<bool> & truth) { return r.cnf.satisfied_by(truth); })
        .def("sat_choice", [] (const ReductionOutput & r, const SubspaceAssignment & a, const std::vector<bool> & truth) {
            return rows_of(sat_choice_strategy(r, a, truth));
        });

    m.def("amplify_to_k", &amplify_to_k, py::arg("graph"), py::arg("f"), py::arg("k"));
}
