#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nsarith/analysis.hpp"
#include "nsarith/automorph.hpp"
#include "nsarith/cli.hpp"
#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"
#include "nsarith/json_io.hpp"
#include "nsarith/suite.hpp"
#include "nsarith/text.hpp"

namespace py = pybind11;
using namespace nsarith;

namespace {

py::object to_py(const json::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json::Json from_py(const py::object& o) {
  return json::Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ModelConfig config(int dim, std::size_t div_budget) {
  ModelConfig cfg;
  cfg.dim = dim;
  cfg.div_budget = div_budget;
  return cfg;
}

template <class Base>
py::exception<Base>& bind_error(py::module_& m, const char* name, PyObject* base) {
  return py::register_exception<Base>(m, name, base);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic on a nonstandard model of arithmetic built from generalized power series.";

  auto& error = bind_error<Error>(m, "Error", PyExc_RuntimeError);
  bind_error<InvariantViolation>(m, "InvariantViolation", error.ptr());
  auto& precondition = bind_error<PreconditionError>(m, "PreconditionError", error.ptr());
  bind_error<StandardInput>(m, "StandardInput", precondition.ptr());
  bind_error<Underflow>(m, "Underflow", error.ptr());
  bind_error<ParseError>(m, "ParseError", error.ptr());
  auto& partial = bind_error<PartialityError>(m, "PartialityError", error.ptr());
  bind_error<NonTerminatingQuotient>(m, "NonTerminatingQuotient", partial.ptr());
  bind_error<CoefficientNotRepresentable>(m, "CoefficientNotRepresentable", partial.ptr());
  auto& negative = bind_error<NegativeResult>(m, "NegativeResult", error.ptr());
  bind_error<NotEquivalent>(m, "NotEquivalent", negative.ptr());
  bind_error<CannotProve>(m, "CannotProve", negative.ptr());
  bind_error<ValidationFailure>(m, "ValidationFailure", negative.ptr());

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text, int dim) {
             return parse_element(text, dim == 0 ? infer_dim(text) : dim);
           }),
           py::arg("text"), py::arg("dim") = 0)
      .def_property_readonly("dim", &Element::dim)
      .def_property_readonly("is_standard", &Element::is_standard)
      .def_property_readonly("deg",
                             [](const Element& e) -> py::object {
                               const auto d = e.deg();
                               return d ? to_py(json::to_json(*d)) : py::none();
                             })
      .def("to_json", [](const Element& e) { return to_py(json::to_json(e)); })
      .def("__str__", &format_element)
      .def("__repr__", [](const Element& e) { return "Element('" + format_element(e) + "')"; })
      .def("__hash__", [](const Element& e) { return py::hash(py::str(format_element(e))); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__pow__", [](const Element& a, unsigned long n) { return pow(a, n); });

  m.def("divmod_scalar", [](const Element& a, long n) {
    const auto d = divmod_scalar(a, n);
    return py::make_tuple(d.quotient, d.remainder.get_si());
  });
  m.def(
      "divmod",
      [](const Element& a, const Element& b, std::size_t budget) {
        const auto d = divmod(a, b, config(a.dim(), budget));
        return py::make_tuple(d.quotient, d.remainder);
      },
      py::arg("a"), py::arg("b"), py::arg("div_budget") = 64);
  m.def(
      "root_floor",
      [](const Element& a, unsigned long k, std::size_t budget) { return root_floor(a, k, config(a.dim(), budget)); },
      py::arg("a"), py::arg("k"), py::arg("div_budget") = 64);

  m.def(
      "decide",
      [](int level, const Element& a, const Element& b) {
        return to_py(json::to_json(equiv::decide(level, a, b, config(a.dim(), 64))));
      },
      py::arg("level"), py::arg("a"), py::arg("b"));
  m.def(
      "prove_e5",
      [](const Element& a, const Element& b) {
        return to_py(json::to_json(equiv::prove_e5(a, b, config(a.dim(), 64))));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "apply",
      [](const py::object& descriptor, const Element& x, bool inverse) {
        const auto d = json::descriptor_from_json(from_py(descriptor), x.dim());
        return inverse ? automorph::apply_inverse(d, x) : automorph::apply(d, x);
      },
      py::arg("descriptor"), py::arg("x"), py::arg("inverse") = false);
  m.def(
      "real_embed",
      [](const Element& a, const Element& b) {
        return to_py(json::to_json(analysis::real_embed(a, b, config(a.dim(), 64))));
      },
      py::arg("anchor"), py::arg("b"));
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t samples, std::uint64_t seed, int dim) {
        suite::SuiteOptions opt;
        opt.name = name;
        opt.samples = samples;
        opt.seed = seed;
        opt.dim = dim;
        opt.model.dim = dim;
        return to_py(suite::run_suite(opt).json);
      },
      py::arg("name") = "all", py::arg("samples") = 100, py::arg("seed") = 1, py::arg("dim") = 1);
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
