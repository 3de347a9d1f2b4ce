#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rzero/argument.hpp"
#include "rzero/auxiliary.hpp"
#include "rzero/report.hpp"
#include "rzero/special_functions.hpp"
#include "rzero/zeros.hpp"

namespace py = pybind11;
using namespace rzero;

namespace {

PrecisionMode precision_from(const std::string& name) {
  if (name == "std") return PrecisionMode::standard;
  if (name == "comp") return PrecisionMode::compensated;
  throw Error(ErrorKind::parse, "precision must be 'std' or 'comp'");
}

}  // namespace

PYBIND11_MODULE(_rzero, m) {
  m.doc() = "Riemann's auxiliary function R(s): evaluation, zero counting and location.";

  static py::exception<Error> error(m, "RzeroError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object instance = exc(e.what());
      instance.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<EvaluationResult>(m, "Evaluation")
      .def_readonly("value", &EvaluationResult::value)
      .def_readonly("error_estimate", &EvaluationResult::error_estimate)
      .def_readonly("scale", &EvaluationResult::scale)
      .def_readonly("u_proxy", &EvaluationResult::u_proxy)
      .def_property_readonly("method",
                             [](const EvaluationResult& r) { return to_string(r.method); });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("segment", &Certificate::segment)
      .def_readonly("bound", &Certificate::bound)
      .def_readonly("realized", &Certificate::realized)
      .def_readonly("ok", &Certificate::ok);

  py::class_<CountResult>(m, "CountResult")
      .def_readonly("T", &CountResult::big_t)
      .def_readonly("t_lo", &CountResult::t_lo)
      .def_readonly("box_left", &CountResult::box_left)
      .def_readonly("count", &CountResult::count)
      .def_readonly("base_count", &CountResult::base_count)
      .def_readonly("smooth_part", &CountResult::smooth_part)
      .def_readonly("sqrt_term", &CountResult::sqrt_term)
      .def_readonly("main_value", &CountResult::main_value)
      .def_readonly("residual", &CountResult::residual)
      .def_readonly("raw_winding", &CountResult::raw_winding)
      .def_readonly("certificates", &CountResult::certificates);

  py::class_<Zero>(m, "Zero")
      .def_readonly("beta", &Zero::beta)
      .def_readonly("gamma", &Zero::gamma)
      .def_readonly("enclosure_radius", &Zero::enclosure_radius)
      .def_readonly("residual_modulus", &Zero::residual_modulus)
      .def_readonly("winding_certificate", &Zero::winding_certificate)
      .def("__repr__", [](const Zero& z) {
        std::ostringstream os;
        os.precision(12);
        os << "Zero(" << z.beta << " + " << z.gamma << "i)";
        return os.str();
      });

  m.def(
      "r_eval",
      [](cplx s, const std::string& precision) {
        EvalOptions options;
        options.precision = precision_from(precision);
        return r_eval(ComplexPoint(s), options);
      },
      py::arg("s"), py::arg("precision") = "std");
  m.def("r_value", [](cplx s) { return r_value(ComplexPoint(s)); }, py::arg("s"));
  m.def("zeta_from_r", [](cplx s) { return zeta_from_r(ComplexPoint(s)); }, py::arg("s"));
  m.def("zeta_reference", [](cplx s) { return zeta_reference(ComplexPoint(s)); }, py::arg("s"));
  m.def("chi", [](cplx s) { return chi(ComplexPoint(s)); }, py::arg("s"));
  m.def("eta", [](cplx s) { return eta(ComplexPoint(s)).value; }, py::arg("s"));
  m.def(
      "main_term",
      [](double big_t) {
        const MainTerm mt = main_term(big_t);
        return py::make_tuple(mt.smooth, mt.sqrt_term, mt.value());
      },
      py::arg("T"), "(smooth part, sqrt term, smooth - sqrt)");

  m.def(
      "count_zeros",
      [](double t_lo, double t_hi, double box_left) { return count_zeros(t_lo, t_hi, box_left); },
      py::arg("t_lo"), py::arg("T"), py::arg("box_left") = -6.0);
  m.def(
      "locate_zeros",
      [](double sigma_lo, double sigma_hi, double t_lo, double t_hi) {
        return locate_r_zeros({sigma_lo, sigma_hi, t_lo, t_hi}).zeros;
      },
      py::arg("sigma_lo"), py::arg("sigma_hi"), py::arg("t_lo"), py::arg("t_hi"));
  m.def(
      "fraction_right",
      [](const std::vector<Zero>& zeros) { return zero_statistics(zeros).fraction_right; },
      py::arg("zeros"));
}
