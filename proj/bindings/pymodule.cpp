#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dunklkit/area.hpp"
#include "dunklkit/boundary.hpp"
#include "dunklkit/dunkl.hpp"
#include "dunklkit/intertwine.hpp"
#include "dunklkit/means.hpp"
#include "dunklkit/poisson.hpp"
#include "dunklkit/verify.hpp"

namespace py = pybind11;
using namespace dunklkit;

namespace {

std::vector<Rational> exact(const std::vector<double>& lam) {
    std::vector<Rational> out;
    for (double l : lam) out.emplace_back(l);
    return out;
}

}  // namespace

PYBIND11_MODULE(_dunklkit, m) {
    m.doc() = "half-space Dunkl analysis toolkit (C++ core)";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);

    m.def(
        "weight",
        [](const std::vector<double>& lam, const std::vector<double>& x) {
            return weight_eval(build_z2(exact(lam)), x);
        },
        py::arg("lam"), py::arg("x"),
        "product of |<alpha, x>|^(2 kappa) over the positive sign-flip roots");

    m.def(
        "ball_measure",
        [](const std::vector<double>& lam, const std::vector<double>& x, double r) {
            return ball_measure(build_z2(exact(lam)), x, r);
        },
        py::arg("lam"), py::arg("x"), py::arg("r"));

    m.def("intertwine", &intertwine_apply, py::arg("lam"), py::arg("f"), py::arg("x"),
          py::arg("n") = 64);
    m.def("translate", &translate_point, py::arg("lam"), py::arg("x"), py::arg("f"),
          py::arg("t"), py::arg("n") = 64);
    m.def("kernel", &dunkl_kernel_eval, py::arg("lam"), py::arg("x"), py::arg("z"),
          py::arg("n") = 64);
    m.def("spherical_mean", &spherical_mean, py::arg("lam"), py::arg("f"), py::arg("x"),
          py::arg("r"), py::arg("n") = 32);

    m.def("poisson_kernel", &poisson_kernel, py::arg("lam"), py::arg("x"), py::arg("y"));
    m.def("translated_poisson", &translated_poisson, py::arg("lam"), py::arg("x"),
          py::arg("y"), py::arg("t"), py::arg("n") = 48);
    m.def("poisson_mass", &translated_poisson_mass, py::arg("lam"), py::arg("x"),
          py::arg("y"), py::arg("n") = 48);

    m.def(
        "poisson_indicator",
        [](const std::vector<double>& lam, const std::vector<double>& lo,
           const std::vector<double>& hi, const std::vector<double>& x, double y) {
            return poisson_integral(lam, BoundaryDatum::indicator(lo, hi), x, y);
        },
        py::arg("lam"), py::arg("lo"), py::arg("hi"), py::arg("x"), py::arg("y"),
        "half-space extension of a box indicator at (x, y)");

    m.def(
        "area_integral_poly",
        [](const std::vector<double>& lam, const std::string& u_text,
           const std::vector<double>& x, double a, double h) {
            int d = (int)lam.size();
            Poly u = Poly::parse(u_text, d + 1, poly_var_names(d, true));
            HarmonicField f = HarmonicField::from_poly(exact(lam), u);
            AreaResult r = area_integral(f, x, a, h);
            return py::make_tuple(r.value, to_string(r.verdict));
        },
        py::arg("lam"), py::arg("u"), py::arg("x"), py::arg("a"), py::arg("h"),
        "square function of a kappa-harmonic polynomial; returns (S, verdict)");

    m.def(
        "harmonic_basis",
        [](const std::vector<double>& lam, int n) {
            RootSystemData rs = build_z2(exact(lam));
            std::vector<std::string> out;
            for (const Poly& p : harmonic_basis(rs, n))
                out.push_back(p.str(poly_var_names(rs.dim, true)));
            return out;
        },
        py::arg("lam"), py::arg("n"),
        "basis of homogeneous degree-n polynomials annihilated by the kappa-Laplacian");

    m.def(
        "laplacian",
        [](const std::vector<double>& lam, const std::string& u_text) {
            RootSystemData rs = build_z2(exact(lam));
            auto names = poly_var_names(rs.dim, true);
            Poly u = Poly::parse(u_text, rs.dim + 1, names);
            return dunkl_laplacian(rs, u).str(names);
        },
        py::arg("lam"), py::arg("u"), "kappa-Laplacian of a polynomial in (x, y), as text");

    m.def(
        "verify",
        [](const std::string& suite, unsigned long long seed) {
            py::list out;
            for (const Check& c : run_suite(suite, seed, 1)) {
                py::dict d;
                d["id"] = c.id;
                d["passed"] = c.passed;
                d["observed"] = c.observed;
                d["bound"] = c.bound;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("seed") = 1ull);

    m.def("suites", [] { return verify_suite_names(); });
}
