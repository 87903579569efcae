#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hamrel/bounds.hpp"
#include "hamrel/error.hpp"
#include "hamrel/oracle.hpp"
#include "hamrel/spline.hpp"

namespace py = pybind11;
using namespace hamrel;

namespace {

// Big integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) {
    return BigInt(py::str(h).cast<std::string>());
}

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

std::vector<BigInt> from_py_list(const py::sequence& seq) {
    std::vector<BigInt> out;
    for (const auto& item : seq) out.push_back(from_py(item));
    return out;
}

HammockVariant parse_variant(const std::string& name) {
    if (name == "A" || name == "brickA") return HammockVariant::brickA;
    if (name == "B" || name == "brickB") return HammockVariant::brickB;
    throw Error(ErrorCode::bad_input, "unknown variant " + name);
}

}  // namespace

PYBIND11_MODULE(_hamrel, m) {
    m.doc() = "Hammock network reliability polynomials";

    static py::exception<Error> error(m, "HamrelError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(code_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("binomial_row", [](std::size_t n) { return to_py(binomial_row(n).values); },
          py::arg("n"));

    m.def(
        "hammock_coeffs",
        [](int l, int w, const std::string& variant, unsigned threads) {
            return to_py(hammock_coeffs(HammockDims(l, w), parse_variant(variant), threads).coeffs);
        },
        py::arg("l"), py::arg("w"), py::arg("variant") = "A", py::arg("threads") = 0);

    m.def(
        "exact_coeffs",
        [](int vertex_count, const std::vector<std::pair<int, int>>& edges, int source,
           int terminal, unsigned threads) {
            TwoTerminalGraph g{vertex_count, edges, source, terminal};
            return to_py(exact_coeffs(g, threads).coeffs);
        },
        py::arg("vertex_count"), py::arg("edges"), py::arg("source"), py::arg("terminal"),
        py::arg("threads") = 0);

    m.def(
        "dual_coeffs",
        [](const py::sequence& coeffs) {
            auto c = from_py_list(coeffs);
            const std::size_t n = c.size() - 1;
            return to_py(dual_coeffs(ExactCoeffVector(n, std::move(c))).coeffs);
        },
        py::arg("coeffs"));

    m.def(
        "eval_nform",
        [](const std::vector<double>& coeffs, double p) { return eval_nform(coeffs, p); },
        py::arg("coeffs"), py::arg("p"));

    m.def(
        "approximate",
        [](int l, int w, const py::object& n_l, const py::object& n_lt, const py::object& nw_dual,
           const py::object& nws_dual, int s, int t, const std::string& mode, int x1, int x2) {
            KnownAnchors a;
            a.dims = HammockDims(l, w);
            a.s = s;
            a.t = t;
            a.n_l = from_py(n_l);
            a.n_lt = from_py(n_lt);
            a.nw_dual = from_py(nw_dual);
            a.nws_dual = from_py(nws_dual);
            ApproxParams params;
            params.s = s;
            params.t = t;
            params.x1 = x1;
            params.x2 = x2;
            if (mode == "general") {
                params.mode = SplineMode::general;
            } else if (mode != "unique") {
                throw Error(ErrorCode::bad_input, "mode must be unique or general");
            }
            const auto r = approximate(a, params);
            py::dict out;
            out["primal"] = r.primal.coeffs;
            out["dual"] = r.dual.coeffs;
            out["controls"] = py::make_tuple(r.model.a, r.model.b, r.model.c, r.model.d);
            out["max_relative_residual"] = r.max_relative_residual;
            return out;
        },
        py::arg("l"), py::arg("w"), py::arg("n_l"), py::arg("n_lt"), py::arg("nw_dual"),
        py::arg("nws_dual"), py::arg("s") = 1, py::arg("t") = 1, py::arg("mode") = "unique",
        py::arg("x1") = 0, py::arg("x2") = 0);

    m.def(
        "stanley_bounds",
        [](int l, int w, const py::object& n_l, const py::object& n_l1, const py::object& n_nw1,
           const py::object& n_nw) {
            const auto bp = stanley_bounds(HammockDims(l, w), from_py(n_l), from_py(n_l1),
                                           from_py(n_nw1), from_py(n_nw));
            return py::make_tuple(to_py(bp.lb), to_py(bp.ub));
        },
        py::arg("l"), py::arg("w"), py::arg("n_l"), py::arg("n_l1"), py::arg("n_nw1"),
        py::arg("n_nw"));

    m.def(
        "error_bound",
        [](int l, int w) {
            const auto eb = error_bound(HammockDims(l, w));
            py::dict out;
            out["M"] = to_py(eb.M);
            out["bound"] = eb.per_network;
            out["bound_exact"] = py::make_tuple(to_py(numerator(eb.per_network_exact)),
                                                to_py(denominator(eb.per_network_exact)));
            out["cumulative"] = eb.cumulative;
            return out;
        },
        py::arg("l"), py::arg("w"));
}
