#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cjones/analysis.hpp"
#include "cjones/braid.hpp"
#include "cjones/jones_engine.hpp"
#include "cjones/json_forms.hpp"
#include "cjones/qformulas.hpp"
#include "cjones/vertex_models.hpp"
#include "cjones/volume_lab.hpp"

namespace py = pybind11;
using namespace cjones;

namespace {

// Accepts a BraidWord or a string such as "1 -2 1 -2".
BraidWord as_braid(const py::object& o, std::optional<int> strands) {
  if (py::isinstance<BraidWord>(o)) return o.cast<BraidWord>();
  return parse_braid(o.cast<std::string>(), strands);
}

// A float phase, or an exact one from fractions.Fraction / int.
PhasePoint as_phase(const py::object& x, double r) {
  if (py::isinstance<py::int_>(x)) return PhasePoint(Rational(x.cast<std::int64_t>()), r);
  if (py::hasattr(x, "numerator") && py::hasattr(x, "denominator") && !py::isinstance<py::float_>(x))
    return PhasePoint(Rational(x.attr("numerator").cast<std::int64_t>(), x.attr("denominator").cast<std::int64_t>()), r);
  return PhasePoint(x.cast<double>(), r);
}

KnotId as_knot(const std::string& s) {
  if (s == "fig8" || s == "4_1") return KnotId::Fig8;
  if (s == "K0" || s == "K_0") return KnotId::K0;
  throw py::value_error("knot must be 'fig8' or 'K0'");
}

PhaseRule as_rule(const std::string& s) {
  if (s == "improved") return PhaseRule::improved();
  if (s == "kashaev") return PhaseRule::kashaev();
  throw py::value_error("rule must be 'improved' or 'kashaev'");
}

JonesOptions as_options(const std::string& framing) {
  JonesOptions o;
  if (framing == "raw")
    o.framing = Framing::Raw;
  else if (framing != "auto")
    throw py::value_error("framing must be 'auto' or 'raw'");
  return o;
}

py::object to_pyint(const BigInt& b) { return py::module_::import("builtins").attr("int")(b.get_str()); }

}  // namespace

PYBIND11_MODULE(cjones, m) {
  m.doc() = "Colored Jones polynomials from vertex-model braid representations";

  static py::exception<Error> base(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidGenerator>(m, "InvalidGenerator", base.ptr());
  py::register_exception<UnsupportedN>(m, "UnsupportedN", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<DegenerateData>(m, "DegenerateData", base.ptr());

  py::class_<LaurentPoly>(m, "LaurentPoly", "Integer Laurent polynomial in q^(1/2)")
      .def("terms",
           [](const LaurentPoly& p) {
             py::list out;
             for (const auto& t : p.terms()) out.append(py::make_tuple(t.exp / 2.0, to_pyint(t.coef)));
             return out;
           },
           "List of (exponent of q, integer coefficient)")
      .def("evaluate", [](const LaurentPoly& p, const py::object& x, double r) { return lp_eval(p, as_phase(x, r)); },
           py::arg("x"), py::arg("r") = 1.0, "Value at q = r exp(2 pi i x)")
      .def("degrees",
           [](const LaurentPoly& p) {
             const auto d = lp_degrees(p);
             return py::make_tuple(d.min_deg, d.max_deg);
           })
      .def("mirrored", &LaurentPoly::mirrored)
      .def("to_json", [](const LaurentPoly& p) { return lp_to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) { return lp_from_json(nlohmann::json::parse(s)); })
      .def("__len__", &LaurentPoly::size)
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly(" + p.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  py::class_<BraidWord>(m, "Braid")
      .def(py::init([](const std::string& text, std::optional<int> strands) { return parse_braid(text, strands); }),
           py::arg("text"), py::arg("strands") = py::none())
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("components", &closure_components)
      .def("inverse", &inverse)
      .def("stabilized", &markov_stabilize, py::arg("sign") = 1)
      .def("conjugated", &markov_conjugate, py::arg("generator"))
      .def(py::self == py::self)
      .def("__str__", &format_braid)
      .def("__repr__", [](const BraidWord& w) { return "Braid('" + format_braid(w) + "', strands=" + std::to_string(w.strands) + ")"; });

  m.def("parse_braid", &parse_braid, py::arg("text"), py::arg("strands") = py::none());

  m.def("jones",
        [](const py::object& braid, int N, std::optional<int> strands, const std::string& framing) {
          return jones(as_braid(braid, strands), N, as_options(framing)).polynomial;
        },
        py::arg("braid"), py::arg("N") = 2, py::arg("strands") = py::none(), py::arg("framing") = "auto",
        "Normalized colored Jones polynomial J_N of the braid closure");
  m.def("jones_eval",
        [](const py::object& braid, int N, const py::object& x, double r, std::optional<int> strands,
           const std::string& framing) {
          const BraidWord w = as_braid(braid, strands);
          const PhasePoint p = as_phase(x, r);
          py::gil_scoped_release release;
          return jones_eval(w, N, p, as_options(framing));
        },
        py::arg("braid"), py::arg("N"), py::arg("x"), py::arg("r") = 1.0, py::arg("strands") = py::none(),
        py::arg("framing") = "auto", "J_N at q = r exp(2 pi i x) without symbolic expansion");

  m.def("jones_fig8", [](int n, const py::object& x, double r) { return jones_fig8(n, as_phase(x, r)).value; },
        py::arg("n"), py::arg("x"), py::arg("r") = 1.0);
  m.def("jones_fig8_symbolic", &jones_fig8_symbolic, py::arg("n"));
  m.def("jones_K0",
        [](int color, const py::object& x, double r) {
          const PhasePoint p = as_phase(x, r);
          py::gil_scoped_release release;
          return jones_K0(color, p).value;
        },
        py::arg("color"), py::arg("x"), py::arg("r") = 1.0);

  m.def("v_of_n",
        [](const std::string& knot, int n, const std::string& rule) {
          const KnotId k = as_knot(knot);
          const PhaseRule pr = as_rule(rule);
          py::gil_scoped_release release;
          return v_of_n(k, n, pr).v;
        },
        py::arg("knot"), py::arg("n"), py::arg("rule") = "improved", "(2 pi/n) log|J_n| at the chosen phase");
  m.def("predict_volume", &predict_volume, py::arg("j3abs"), "Volume from |J_3(e^(8 pi i/15))|");
  m.def("fit_log_model",
        [](const std::vector<double>& xs, const std::vector<double>& ys, bool fix_b) {
          if (xs.size() != ys.size()) throw py::value_error("xs and ys differ in length");
          std::vector<std::pair<double, double>> data;
          for (std::size_t k = 0; k < xs.size(); ++k) data.emplace_back(xs[k], ys[k]);
          FitOptions opt;
          opt.fix_b = fix_b;
          const FitParams f = fit_log_model(data, opt);
          py::dict d;
          d["a"] = f.a;
          d["b"] = f.b;
          d["c"] = f.c;
          d["d"] = f.d;
          d["r_squared"] = f.r_squared;
          d["residual_norm"] = f.residual_norm;
          d["iterations"] = f.iterations;
          return d;
        },
        py::arg("xs"), py::arg("ys"), py::arg("fix_b") = false, "Fit y = a log(b x + c) + d");

  m.def("roots", [](const LaurentPoly& p) { return roots(p).roots; }, py::arg("poly"),
        "Complex zeros in q, origin zeros included");
  m.def("verify_yang_baxter", py::overload_cast<int>(&verify_yang_baxter), py::arg("N"));
  m.def("largest_sector_dimension", &largest_sector_dimension, py::arg("N"), py::arg("strands"));

  m.attr("VOLUME_FIG8") = kVolumeFig8;
  m.attr("VOLUME_K0") = kVolumeK0;
}
