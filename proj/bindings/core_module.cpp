// Python bindings for the permutation toolkit. Quantities that can exceed
// 64 bits (ranks, element orders, exponents) cross the boundary as Python
// ints via decimal strings, so nothing ever truncates.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>

#include "permkit/cycle_notation.hpp"
#include "permkit/group.hpp"
#include "permkit/perm.hpp"
#include "permkit/ranking.hpp"

namespace py = pybind11;

using permkit::Bigint;
using permkit::Perm;
using permkit::PermGroup;
using permkit::Point;
using permkit::RandomSource;

namespace {

py::int_ to_py_int(const Bigint& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

Bigint to_bigint(const py::int_& value) {
    return Bigint(py::cast<std::string>(py::str(value)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Permutations, permutation groups, and two ranking schemes";

    // Every library error surfaces as this one exception type.
    py::register_exception<permkit::PermError>(m, "PermError", PyExc_ValueError);

    py::class_<Perm>(m, "Perm",
                     "An immutable permutation with finite support. Composition\n"
                     "applies the right factor first: (p * q)[k] == p[q[k]].")
        .def(py::init<>(), "The identity permutation")
        .def_static("from_array", &Perm::from_array, py::arg("values"),
                    "Permutation from one-line notation")
        .def_static("from_cycles", &Perm::from_cycles, py::arg("cycles"),
                    "Product of the given cycles, applied left to right")
        .def_static(
            "parse", [](const std::string& text) { return permkit::parse_cycles(text); },
            py::arg("text"), "Parse cycle notation such as '(0 1 2)(3 4)'")
        .def("apply", &Perm::apply, py::arg("point"))
        .def("__getitem__", &Perm::apply)
        .def("is_identity", &Perm::is_identity)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def("__invert__", &Perm::inverse)
        .def("inverse", &Perm::inverse)
        .def(
            "__pow__",
            [](const Perm& p, const py::int_& exponent) { return p.pow(to_bigint(exponent)); },
            py::arg("exponent"))
        .def("commutes_with", &Perm::commutes_with, py::arg("other"))
        .def("commutator", &Perm::commutator, py::arg("other"), "p * q * ~p * ~q")
        .def("support", &Perm::support)
        .def("max_moved", &Perm::max_moved)
        .def("min_moved", &Perm::min_moved)
        .def(
            "to_array",
            [](const Perm& p, std::optional<std::size_t> size) {
                return size ? p.to_array(*size) : p.to_array();
            },
            py::arg("size") = std::nullopt, "One-line notation on 0..size-1")
        .def("cycles", &Perm::cycles, "Canonical disjoint cycles")
        .def("order", [](const Perm& p) { return to_py_int(p.order()); })
        .def("parity", &Perm::parity)
        .def("is_even", &Perm::is_even)
        .def("is_odd", &Perm::is_odd)
        .def("sign", &Perm::sign)
        .def(
            "label",
            [](const Perm& p, std::optional<std::size_t> size) {
                return size ? p.label(*size) : p.label();
            },
            py::arg("size") = std::nullopt, "Base-62 word encoding the images")
        .def("__hash__", [](const Perm& p) { return std::hash<Perm>{}(p); })
        .def("__str__", [](const Perm& p) { return permkit::to_cycle_text(p); })
        .def("__repr__", [](const Perm& p) { return permkit::to_cycle_text(p); });

    py::class_<RandomSource>(m, "RandomSource",
                             "Deterministic random stream with a remembered seed")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_static("from_entropy", &RandomSource::from_entropy)
        .def_property_readonly("seed", &RandomSource::seed)
        .def("next", &RandomSource::next)
        .def("below", &RandomSource::below, py::arg("bound"),
             "Uniform draw from [0, bound)");

    py::class_<PermGroup>(m, "PermGroup",
                          "A finite permutation group stored by full enumeration")
        .def(py::init<std::size_t>(), py::arg("max_order") = PermGroup::kDefaultMaxOrder)
        .def_property_readonly("max_order", &PermGroup::max_order)
        .def("insert", &PermGroup::insert, py::arg("generator"),
             "Add a generator and close under composition")
        .def("order", &PermGroup::order)
        .def("__len__", &PermGroup::order)
        .def("contains", &PermGroup::contains, py::arg("perm"))
        .def("__contains__", &PermGroup::contains)
        .def(
            "__iter__",
            [](const PermGroup& g) {
                return py::make_iterator(g.perms().begin(), g.perms().end());
            },
            py::keep_alive<0, 1>())
        .def("is_trivial", &PermGroup::is_trivial)
        .def("is_abelian", &PermGroup::is_abelian)
        .def("is_subgroup_of", &PermGroup::is_subgroup_of, py::arg("group"))
        .def("is_normal_in", &PermGroup::is_normal_in, py::arg("group"))
        .def("subgroup_search", &PermGroup::subgroup_search, py::arg("keep"),
             "Closure of the elements satisfying a predicate")
        .def("normalizer", &PermGroup::normalizer, py::arg("subgroup"))
        .def("centralizer", &PermGroup::centralizer, py::arg("subgroup"))
        .def("center", &PermGroup::center)
        .def("orbits", &PermGroup::orbits, py::arg("points"))
        .def("is_transitive", &PermGroup::is_transitive, py::arg("points"),
             py::arg("strict") = true)
        .def("stabilizer", &PermGroup::stabilizer, py::arg("point"))
        .def("__repr__", [](const PermGroup& g) {
            return "<PermGroup of order " + std::to_string(g.order()) + ">";
        });

    m.def("commutator_subgroup", &permkit::commutator_subgroup, py::arg("h"), py::arg("k"),
          "Group generated by all commutators between the two groups");

    m.def(
        "parse_cycles", [](const std::string& text) { return permkit::parse_cycles(text); },
        py::arg("text"));
    m.def("to_cycle_text", &permkit::to_cycle_text, py::arg("perm"));

    m.def(
        "inversion_vector",
        [](const Perm& p, std::size_t size) { return permkit::inversion_vector(p, size); },
        py::arg("perm"), py::arg("size"));
    m.def(
        "rank_lex",
        [](const Perm& p, std::size_t size) { return to_py_int(permkit::rank_lex(p, size)); },
        py::arg("perm"), py::arg("size"), "Lexicographic rank, quadratic time");
    m.def(
        "unrank_lex",
        [](std::size_t size, const py::int_& rank) {
            return permkit::unrank_lex(size, to_bigint(rank));
        },
        py::arg("size"), py::arg("rank"));
    m.def(
        "rank_mr",
        [](const Perm& p, std::size_t size) { return to_py_int(permkit::rank_mr(p, size)); },
        py::arg("perm"), py::arg("size"), "Myrvold-Ruskey rank, near-linear time");
    m.def(
        "unrank_mr",
        [](std::size_t size, const py::int_& rank) {
            return permkit::unrank_mr(size, to_bigint(rank));
        },
        py::arg("size"), py::arg("rank"));
    m.def(
        "factorial", [](std::uint64_t n) { return to_py_int(permkit::factorial(n)); },
        py::arg("n"));
    m.def("random_perm", &permkit::random_perm, py::arg("size"), py::arg("source"),
          "Uniformly random permutation of 0..size-1 by Fisher-Yates");

    m.def("gcd", &permkit::gcd, py::arg("a"), py::arg("b"));
    m.def("lcm", &permkit::lcm, py::arg("a"), py::arg("b"));
}
