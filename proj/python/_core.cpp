#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "herschel/format.hpp"
#include "herschel/polylog.hpp"
#include "herschel/polynomial.hpp"
#include "herschel/rational.hpp"
#include "herschel/sequences.hpp"
#include "herschel/zero_differences.hpp"

namespace py = pybind11;

namespace {

py::object big_int(const herschel::BigInt& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object fraction(const herschel::Rational& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(q.get_str());
}

herschel::Rational to_rational(const py::object& obj) {
    return herschel::parse_rational(py::str(obj).cast<std::string>());
}

py::list fraction_list(const std::vector<herschel::Rational>& v) {
    py::list out;
    for (const auto& q : v) out.append(fraction(q));
    return out;
}

py::list coeff_fractions(const herschel::RationalPolynomial& p) {
    py::list out;
    if (p.is_zero()) {
        out.append(fraction(herschel::Rational(0)));
        return out;
    }
    for (std::size_t k = 0; k <= p.degree(); ++k) out.append(fraction(p.coeff(k)));
    return out;
}

py::list coeff_ints(const herschel::RationalPolynomial& p) {
    py::list out;
    if (p.is_zero()) {
        out.append(py::int_(0));
        return out;
    }
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        herschel::Rational c = p.coeff(k);
        out.append(big_int(c.get_num()));
    }
    return out;
}

py::dict polylog_dict(const herschel::PolylogResult& res) {
    py::dict out;
    out["value"] = res.value;
    out["abs_error_estimate"] = res.abs_error_estimate;
    out["terms_used"] = res.terms_used;
    out["status"] = herschel::to_string(res.status);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Herschel-transform toolkit: exact classical sequences and Li_s(x)";

    m.def("delta_zero", [](std::size_t j, std::size_t n) { return big_int(herschel::delta_zero(j, n)); },
          py::arg("j"), py::arg("n"), "Finite difference of zero Delta^j 0^n");
    m.def("stirling2", [](std::size_t n, std::size_t j) { return big_int(herschel::stirling2(n, j)); },
          py::arg("n"), py::arg("j"), "Stirling number of the second kind S(n, j)");

    m.def("bernoulli", [](std::size_t n) { return fraction(herschel::bernoulli(n)); }, py::arg("n"),
          "Bernoulli number B_n as a Fraction");
    m.def("bernoulli_numbers",
          [](std::size_t n_max) { return fraction_list(herschel::bernoulli_numbers(n_max)); },
          py::arg("n_max"));

    m.def("euler_polynomial",
          [](std::size_t n) { return coeff_fractions(herschel::euler_polynomial(n)); },
          py::arg("n"), "Ascending coefficients of E_n(x)");
    m.def("euler_number", [](std::size_t n) { return big_int(herschel::euler_number(n)); },
          py::arg("n"));

    m.def("eulerian_polynomial",
          [](std::size_t n) { return coeff_ints(herschel::eulerian_polynomial(n)); }, py::arg("n"),
          "Ascending coefficients of A_n(lambda); all integers");
    m.def("carlitz_h",
          [](std::size_t n, const py::object& lam) {
              return fraction(herschel::carlitz_h(n, to_rational(lam)));
          },
          py::arg("n"), py::arg("lam"), "Carlitz H_n at a rational lambda (int, str or Fraction)");
    m.def("genocchi", [](std::size_t n) { return big_int(herschel::genocchi(n)); }, py::arg("n"));

    m.def("polylog_coefficients",
          [](std::complex<double> s, std::size_t n_max) {
              return herschel::polylog_coefficients(s, n_max);
          },
          py::arg("s"), py::arg("n_max"), "Continuation coefficients b_0..b_n");
    m.def("polylog",
          [](std::complex<double> s, std::complex<double> x, double rel_tol, std::size_t max_terms,
             double radius_guard) {
              herschel::PolylogRequest req;
              req.s = s;
              req.x = x;
              req.rel_tol = rel_tol;
              req.max_terms = max_terms;
              req.radius_guard = radius_guard;
              return polylog_dict(herschel::polylog_eval(req));
          },
          py::arg("s"), py::arg("x"), py::arg("rel_tol") = 1e-15, py::arg("max_terms") = 200,
          py::arg("radius_guard") = 0.99,
          "Li_s(x) on the cut plane; returns value/error/terms/status");
}
