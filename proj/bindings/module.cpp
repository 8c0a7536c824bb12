// Python bindings. The API sticks to plain Python types: quiddity sequences
// are lists of ints, quiver words are strings, frieze entries come back as
// exact Python ints of any size.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "friezes/errors.hpp"
#include "friezes/frieze.hpp"
#include "friezes/growth.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"
#include "friezes/triangulation.hpp"
#include "friezes/tube.hpp"
#include "friezes/verify.hpp"

namespace py = pybind11;

namespace {

using namespace friezes;

using Entries = std::vector<std::int64_t>;

py::int_ to_py(const BigInt& x) {
    const std::string digits = x.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py_row(const std::vector<BigInt>& row) {
    py::list out;
    for (const BigInt& x : row) out.append(to_py(x));
    return out;
}

QuidditySequence seq(const Entries& entries) { return QuidditySequence(entries); }

py::dict triangulation_dict(const SkeletalTriangulation& t) {
    py::list arcs;
    for (const Arc& a : t.arcs) arcs.append(py::make_tuple(a.outer, a.inner));
    py::dict d;
    d["outer"] = t.outer_count;
    d["inner"] = t.inner_count;
    d["arcs"] = arcs;
    d["inner_offset"] = t.inner_offset;
    return d;
}

}  // namespace

PYBIND11_MODULE(friezes, m) {
    m.doc() = "Exact arithmetic for infinite periodic friezes";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("classify", [](const Entries& q) { return to_string(classify(seq(q))); },
          py::arg("q"), "InfiniteType, FiniteType or Invalid");
    m.def("is_skeletal", [](const Entries& q) { return is_skeletal(seq(q)); }, py::arg("q"));
    m.def("is_trivial", [](const Entries& q) { return is_trivial(seq(q)); }, py::arg("q"));
    m.def("canonical_rotation",
          [](const Entries& q) { return canonical_rotation(seq(q)).entries(); }, py::arg("q"));
    m.def("cyclically_equal",
          [](const Entries& a, const Entries& b) { return cyclically_equal(seq(a), seq(b)); },
          py::arg("a"), py::arg("b"));
    m.def("reduce_once",
          [](const Entries& q, std::size_t index) { return reduce_once(seq(q), index).entries(); },
          py::arg("q"), py::arg("index"));
    m.def("reverse_reduce",
          [](const Entries& q, std::size_t gap) { return reverse_reduce(seq(q), gap).entries(); },
          py::arg("q"), py::arg("gap"));
    m.def("reduce_to_skeletal",
          [](const Entries& q) { return reduce_to_skeletal(seq(q)).entries(); }, py::arg("q"),
          "Fully reduced form of an InfiniteType quiddity sequence");
    m.def("partner", [](const Entries& q) { return partner(seq(q)).entries(); }, py::arg("q"),
          "Quiddity sequence of the other boundary of the skeletal annulus");
    m.def("block_form", [](const Entries& q) {
        py::list out;
        for (const Block& b : block_form(seq(q))) out.append(py::make_tuple(b.head, b.run));
        return out;
    }, py::arg("q"), "Blocks (head, run) of a skeletal sequence");

    m.def("entry", [](const Entries& q, std::int64_t i, std::int64_t j) {
        return to_py(entry(seq(q), i, j));
    }, py::arg("q"), py::arg("i"), py::arg("j"), "Frieze entry a(i, j) via the recurrence");
    m.def("entry_determinant", [](const Entries& q, std::int64_t i, std::int64_t j) {
        return to_py(entry_determinant(seq(q), i, j));
    }, py::arg("q"), py::arg("i"), py::arg("j"));
    m.def("entry_pair_excluding", [](const Entries& q, std::int64_t i, std::int64_t j) {
        return to_py(entry_pair_excluding(seq(q), i, j));
    }, py::arg("q"), py::arg("i"), py::arg("j"));
    m.def("rows", [](const Entries& q, std::size_t depth) {
        py::list out;
        for (const auto& row : rows(seq(q), depth)) out.append(to_py_row(row));
        return out;
    }, py::arg("q"), py::arg("depth") = 10);
    m.def("rows_text", [](const Entries& q, std::size_t depth) { return rows_text(seq(q), depth); },
          py::arg("q"), py::arg("depth") = 10);
    m.def("pair_excluding_subsets", [](int n, bool cyclic) {
        return (cyclic ? cyclic_pair_excluding_subsets(n) : pair_excluding_subsets(n)).subsets;
    }, py::arg("n"), py::arg("cyclic") = false);

    m.def("growth_coefficient", [](const Entries& q, const std::string& method) {
        const QuidditySequence s = seq(q);
        if (method == "rows") return to_py(growth_coefficient_rows(s));
        if (method == "formula") return to_py(growth_coefficient_formula(s));
        return to_py(growth_report(s, 1, GrowthMethod::Both).s_q);
    }, py::arg("q"), py::arg("method") = "both");
    m.def("growth_sequence", [](const Entries& q, std::int64_t r) {
        return to_py_row(growth_sequence(seq(q), r));
    }, py::arg("q"), py::arg("r"), "s_0..s_r of the minimal-period frieze");
    m.def("minimal_period", [](const Entries& q) { return minimal_period(seq(q)); }, py::arg("q"));

    m.def("sigma", [](const std::string& word) { return sigma(NonOrientedCycle(word)).entries(); },
          py::arg("word"));
    m.def("sigma_tilde",
          [](const std::string& word) { return sigma_tilde(NonOrientedCycle(word)).entries(); },
          py::arg("word"));
    m.def("mu", [](const Entries& q) { return mu(seq(q)).word(); }, py::arg("q"));
    m.def("canonicalize",
          [](const std::string& word) { return canonicalize(NonOrientedCycle(word)).word(); },
          py::arg("word"));
    m.def("same_unlabeled", [](const std::string& a, const std::string& b) {
        return same_unlabeled(NonOrientedCycle(a), NonOrientedCycle(b));
    }, py::arg("a"), py::arg("b"));
    m.def("to_dot", [](const std::string& word) { return to_dot(NonOrientedCycle(word)); },
          py::arg("word"));

    m.def("triangulation", [](const Entries& q) {
        return triangulation_dict(triangulation_from_quiddity(seq(q)));
    }, py::arg("q"), "Skeletal annulus triangulation as a plain dict");
    m.def("quiddity_pair", [](const Entries& q) {
        const QuiddityPair p = quiddity_pair(triangulation_from_quiddity(seq(q)));
        return py::make_tuple(p.outer.entries(), p.inner.entries());
    }, py::arg("q"), "Outer and inner quiddity sequences of the skeletal triangulation");
    m.def("render_svg", [](const Entries& q) {
        return render_svg(triangulation_from_quiddity(seq(q)));
    }, py::arg("q"));

    m.def("cc_value", [](const Entries& q, std::int64_t start, std::int64_t end) {
        return to_py(cc_value(seq(q), {static_cast<std::int64_t>(q.size()), start, end}));
    }, py::arg("q"), py::arg("start"), py::arg("end"),
          "Cluster character value of the tube module M_{start,end}");
    m.def("repth_rhs", [](const Entries& q, std::int64_t i, std::int64_t t) {
        return to_py(repth_rhs(seq(q), i, t));
    }, py::arg("q"), py::arg("i"), py::arg("t"));

    m.def("verify", [](std::uint64_t seed, int samples) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        py::list out;
        for (const SuiteResult& r : verify_all(opt)) {
            py::dict d;
            d["name"] = r.name;
            d["cases"] = r.cases;
            d["failures"] = r.failures;
            d["first_failure"] = r.first_failure;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = VerifyOptions{}.seed, py::arg("samples") = 50,
          "Run every property suite; returns one dict per suite");
}
