#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "commands.hpp"
#include "rsb/model.hpp"
#include "rsb/pants.hpp"
#include "rsb/parse.hpp"
#include "rsb/spectra.hpp"
#include "rsb/symplectic.hpp"

namespace py = pybind11;
using namespace rsb;

namespace {

using Rows = std::vector<std::vector<std::string>>;

MatrixK to_matrix(const Rows& rows) { return matrix_from_json(json(rows)); }

Rows from_matrix(const MatrixK& m) {
    Rows out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
    return out;
}

LagrangianK to_lagrangian(const Rows& basis) { return LagrangianK::span(to_matrix(basis)); }

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

// JSON documents cross the boundary as text; the Python side wraps json.
std::string run(const std::string& command, const std::string& input, const cli::Flags& flags) {
    json doc = input.empty() ? json::object() : json::parse(input);
    return cli::run_command(command, doc, flags).dump();
}

}  // namespace

PYBIND11_MODULE(_rsbound, m) {
    m.doc() = "Exact field, valuation and spectral computations over Q(X)";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DegreeBoundExceeded>(m, "DegreeBoundExceeded", PyExc_RuntimeError);
    py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_ValueError);
    py::register_exception<TransversalityError>(m, "TransversalityError", PyExc_ArithmeticError);

    m.def("canonical", [](const std::string& s) { return to_string(parse_ratfunc(s)); }, py::arg("expr"),
          "Canonical string of a rational function in X.");
    m.def(
        "sign", [](const std::string& s, const std::string& order) { return sign(parse_ratfunc(s), parse_order(order)); },
        py::arg("expr"), py::arg("order") = "aplus:0");
    m.def(
        "valuation",
        [](const std::string& s, const std::string& val) { return to_string(nu(parse_ratfunc(s), parse_valuation(val))); },
        py::arg("expr"), py::arg("valuation") = "adic:0", "Valuation as a string, \"inf\" for zero.");

    m.def("is_symplectic", [](const Rows& g) {
        MatrixK a = to_matrix(g);
        return is_symplectic(a, SymplecticForm{a.rows() / 2});
    });
    m.def(
        "maslov",
        [](const Rows& a, const Rows& b, const Rows& c, const std::string& order) {
            return maslov(to_lagrangian(a), to_lagrangian(b), to_lagrangian(c), parse_order(order));
        },
        py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("order") = "aplus:0");
    m.def(
        "crossratio",
        [](const Rows& a, const Rows& b, const Rows& c, const Rows& d) {
            return to_string(crossratio(to_lagrangian(a), to_lagrangian(b), to_lagrangian(c), to_lagrangian(d)));
        },
        py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("l4"));

    m.def(
        "jordan",
        [](const Rows& g, const std::string& val, bool linear) {
            auto mode = linear ? SpectralMode::Linear : SpectralMode::Symplectic;
            return strings(jordan_valuation(to_matrix(g), parse_valuation(val), mode).entries);
        },
        py::arg("matrix"), py::arg("valuation") = "adic:0", py::arg("linear") = false);
    m.def(
        "translation_length",
        [](const Rows& g, const std::string& val, const std::string& norm) {
            return to_string(translation_length(to_matrix(g), parse_valuation(val), parse_norm(norm)));
        },
        py::arg("matrix"), py::arg("valuation") = "adic:0", py::arg("norm") = "sum");
    m.def(
        "distance",
        [](const Rows& g1, const Rows& g2, const std::string& val, const std::string& norm) {
            return to_string(building_pseudodistance(to_matrix(g1), to_matrix(g2), parse_valuation(val), parse_norm(norm)));
        },
        py::arg("g1"), py::arg("g2"), py::arg("valuation") = "adic:0", py::arg("norm") = "sum");

    m.def(
        "pants_images",
        [](const std::string& order) {
            OrderSpec ord = parse_order(order);
            RepTable rep = pants_representation(ord, canonical_valuation(ord));
            std::vector<Rows> out;
            for (const auto& g : rep.images()) out.push_back(from_matrix(g));
            return out;
        },
        py::arg("order") = "aplus:0", "Images of c1, c2, c3.");
    m.def(
        "pants_document",
        [](const std::string& order) {
            OrderSpec ord = parse_order(order);
            return pants_document(ord, canonical_valuation(ord)).dump();
        },
        py::arg("order") = "aplus:0");

    py::class_<cli::Flags>(m, "Flags")
        .def(py::init<>())
        .def_readwrite("order", &cli::Flags::order)
        .def_readwrite("valuation", &cli::Flags::valuation)
        .def_readwrite("radius", &cli::Flags::radius)
        .def_readwrite("kmax", &cli::Flags::kmax)
        .def_readwrite("degree_bound", &cli::Flags::degree_bound)
        .def_readwrite("norm", &cli::Flags::norm)
        .def_readwrite("threads", &cli::Flags::threads)
        .def_readwrite("max_length", &cli::Flags::max_length)
        .def_readwrite("linear", &cli::Flags::linear)
        .def_readwrite("words", &cli::Flags::words);

    m.def("commands", &cli::command_names);
    m.def("run_json", &run, py::arg("command"), py::arg("input"), py::arg("flags"),
          py::call_guard<py::gil_scoped_release>());
}
