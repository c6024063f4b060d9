#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "valentkit/cli.hpp"
#include "valentkit/error.hpp"
#include "valentkit/io.hpp"
#include "valentkit/paired.hpp"
#include "valentkit/remez.hpp"
#include "valentkit/taylor.hpp"
#include "valentkit/valency.hpp"

namespace py = pybind11;
using namespace valentkit;

namespace {

// Reports cross the boundary as plain dicts, via the same JSON the CLI emits.
py::object to_py(const json &j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

PointSet points(const std::vector<Complex> &z) { return PointSet(z); }

AnalyticFn function(const std::vector<Complex> &coeffs, std::optional<double> radius, std::optional<double> tail)
{
    if (radius)
        return TaylorSeries(coeffs, *radius, tail);
    return Polynomial(coeffs);
}

} // namespace

PYBIND11_MODULE(_valentkit, m)
{
    m.doc() = "Cartan measures, covering numbers, Remez bounds and valency probes";
    m.attr("__version__") = kVersion;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_OSError);

    m.def("min_enclosing_disk", [](const std::vector<Complex> &z) {
        const Disk d = min_enclosing_disk(points(z));
        return py::make_tuple(d.center, d.radius);
    }, py::arg("points"), "(center, radius) of the smallest enclosing disk");

    m.def("cartan_measure", [](const std::vector<Complex> &z, int d, double alpha, const std::string &mode) {
        return to_py(to_json(cartan_measure(points(z), d, alpha, parse_cartan_mode(mode))));
    }, py::arg("points"), py::arg("d"), py::arg("alpha"), py::arg("mode") = "exact");

    m.def("covering_number", [](const std::vector<Complex> &z, double eps) { return covering_number(points(z), eps); },
          py::arg("points"), py::arg("eps"));
    m.def("covering_curve", [](const std::vector<Complex> &z) { return to_py(to_json(covering_curve(points(z)))); },
          py::arg("points"));
    m.def("omega_d", [](const std::vector<Complex> &z, int d) { return omega_d(points(z), d); });
    m.def("omega_cd", [](const std::vector<Complex> &z, int d) { return omega_cd(points(z), d); });
    m.def("rho_d", [](const std::vector<Complex> &z, int d) { return rho_d(points(z), d); });

    m.def("paired_example_report", [](int d, double h, double eta, double D) {
        return to_py(to_json(paired_example_report(d, h, eta, D)));
    }, py::arg("d"), py::arg("h"), py::arg("eta"), py::arg("D") = 0.0);

    m.def("max_modulus_circle", [](const std::vector<Complex> &coeffs, double r, double tol) {
        const auto mm = max_modulus_circle(Polynomial(coeffs), r, tol);
        return py::dict(py::arg("value") = mm.value, py::arg("upper") = mm.upper, py::arg("argmax") = mm.argmax,
                        py::arg("certified") = mm.certified);
    }, py::arg("coeffs"), py::arg("r") = 1.0, py::arg("tol") = 1e-8);

    m.def("count_zeros", [](const std::vector<Complex> &coeffs, double r, std::optional<double> radius,
                            std::optional<double> tail) {
        return to_py(to_json(count_zeros(function(coeffs, radius, tail), r)));
    }, py::arg("coeffs"), py::arg("r"), py::arg("radius") = py::none(), py::arg("tail_bound") = py::none(),
       "zero count in |z| < r; pass radius (and tail_bound) for series input");

    m.def("valency_probe", [](const std::vector<Complex> &coeffs, int s, double R, int trials, double coeff_bound,
                              std::uint64_t seed) {
        return to_py(to_json(valency_probe(Polynomial(coeffs), s, R, trials, coeff_bound, seed)));
    }, py::arg("coeffs"), py::arg("s"), py::arg("R"), py::arg("trials") = 200, py::arg("coeff_bound") = 1.0,
       py::arg("seed") = 42);

    m.def("example_exa_report", [](int p, int N, int trials, std::uint64_t seed) {
        return to_py(to_json(example_exa_report(p, N, trials, seed)));
    }, py::arg("p"), py::arg("N"), py::arg("trials") = 200, py::arg("seed") = 42);

    m.def("distortion_check", [](const std::vector<Complex> &coeffs, const std::vector<Complex> &zeros, int p,
                                 const std::string &grid) {
        return to_py(to_json(distortion_check(Polynomial(coeffs), zeros, p, parse_grid(grid))));
    }, py::arg("coeffs"), py::arg("zeros"), py::arg("p"), py::arg("grid") = "radial:24x12");

    m.def("domination_profile", [](const std::vector<Complex> &coeffs, double radius, int N, double R) {
        return to_py(to_json(domination_profile(TaylorSeries(coeffs, radius), N, R)));
    }, py::arg("coeffs"), py::arg("radius"), py::arg("N"), py::arg("R"));
    m.def("extract_recurrence", [](const std::vector<Complex> &coeffs, double radius, int m_, double rho) {
        return to_py(to_json(extract_recurrence(TaylorSeries(coeffs, radius), m_, rho)));
    }, py::arg("coeffs"), py::arg("radius"), py::arg("m"), py::arg("rho"));
    m.def("valency_radius", &valency_radius, py::arg("m"), py::arg("K"), py::arg("rho"));

    m.def("remez_check_polynomial", [](const std::vector<Complex> &coeffs, const std::vector<Complex> &z, double alpha) {
        return to_py(to_json(remez_check_polynomial(Polynomial(coeffs), points(z), alpha)));
    }, py::arg("coeffs"), py::arg("points"), py::arg("alpha") = 1.0);
    m.def("k_d", [](const std::vector<Complex> &z, int d) { return to_py(to_json(k_d(points(z), d))); },
          py::arg("points"), py::arg("d"));
    m.def("sigma_p", &sigma_p, py::arg("R"), py::arg("rho"), py::arg("p"));

    m.def("run", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "run the command-line interface in-process; returns (exit_code, stdout, stderr)");
}
