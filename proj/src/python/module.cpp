#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lineops/catalog.hpp"
#include "lineops/cli.hpp"
#include "lineops/dynamics.hpp"
#include "lineops/io.hpp"
#include "lineops/matroid.hpp"
#include "lineops/render.hpp"

namespace py = pybind11;
using namespace lineops;

namespace {

// JSON crosses the boundary as text; the json module does the rest.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::string scalar_text(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return v.cast<std::string>();
  if (py::isinstance<py::int_>(v)) return py::str(v).cast<std::string>();
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator"))
    return py::str(v.attr("numerator")).cast<std::string>() + "/" + py::str(v.attr("denominator")).cast<std::string>();
  throw Error(ErrorKind::Parse, "coefficients must be str, int or Fraction");
}

Arrangement make_lines(const std::vector<std::vector<py::object>>& rows, const std::string& field) {
  Field f = Field::parse(field);
  std::vector<ProjLine> v;
  for (auto& r : rows) {
    if (r.size() != 3) throw Error(ErrorKind::Parse, "each line needs three coefficients");
    v.emplace_back(f.parse_scalar(scalar_text(r[0])), f.parse_scalar(scalar_text(r[1])),
                   f.parse_scalar(scalar_text(r[2])));
  }
  return Arrangement(f, v);
}

MultiplicitySelector sel(const py::object& o) {
  if (py::isinstance<py::str>(o)) return MultiplicitySelector::parse(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return MultiplicitySelector::exactly({o.cast<int>()});
  return MultiplicitySelector::exactly(o.cast<std::vector<int>>());
}

py::dict profile_dict(const Arrangement& L) {
  auto pr = profile(L);
  py::dict t;
  for (auto& [k, n] : pr.t) t[py::int_(k)] = n;
  py::dict d;
  d["d"] = pr.d;
  d["t"] = t;
  if (pr.singular_points() > 0) {
    auto h = h_constant(pr);
    d["H"] = py::module_::import("fractions").attr("Fraction")(h.get_str());
  } else {
    d["H"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_lineops, m) {
  m.doc() = "Exact line-arrangement operators";

  static PyObject* exc = PyErr_NewException("lineops.LineopsError", PyExc_ValueError, nullptr);
  m.attr("LineopsError") = py::reinterpret_borrow<py::object>(exc);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(exc, (std::string(e.kind_name()) + ": " + e.what()).c_str());
    } catch (const Json::exception& e) {
      PyErr_SetString(exc, (std::string("parse: ") + e.what()).c_str());
    }
  });

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init(&make_lines), py::arg("lines"), py::arg("field") = "Q")
      .def_static(
          "from_json", [](const std::string& text) { return read_document_text(text).arrangement(); },
          py::arg("text"))
      .def("to_json", [](const Arrangement& L) { return to_json(L).dump(); })
      .def_property_readonly("field", [](const Arrangement& L) { return L.field().to_string(); })
      .def_property_readonly("lines",
                             [](const Arrangement& L) {
                               std::vector<std::tuple<std::string, std::string, std::string>> v;
                               for (auto& l : L) v.emplace_back(l[0].to_string(), l[1].to_string(), l[2].to_string());
                               return v;
                             })
      .def("__len__", &Arrangement::size)
      .def("__eq__", [](const Arrangement& a, const Arrangement& b) { return a.field() == b.field() && a == b; })
      .def("__hash__", [](const Arrangement& a) { return std::hash<std::string>()(a.canonical_text()); })
      .def("__repr__",
           [](const Arrangement& a) {
             return "<Arrangement " + std::to_string(a.size()) + " lines over " + a.field().to_string() + ">";
           })
      .def("apply", [](const Arrangement& L, const std::string& op) { return OperatorSpec::parse(op).apply(L); },
           py::arg("op"))
      .def("profile", &profile_dict)
      .def("union", [](const Arrangement& a, const Arrangement& b) { return set_union(a, b); })
      .def("issuperset", [](const Arrangement& a, const Arrangement& b) { return a.includes(b); });

  m.def(
      "build",
      [](const std::string& name, const py::kwargs& kw) {
        CatalogParams p;
        for (auto& [k, v] : kw) p[k.cast<std::string>()] = py::str(v).cast<std::string>();
        return build(name, p).arrangement;
      },
      py::arg("name"));
  m.def("catalog", [] {
    std::vector<std::string> names;
    for (auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def(
      "lam", [](const py::object& n, const py::object& mm, const Arrangement& L) { return lambda_op(sel(n), sel(mm), L); },
      py::arg("n"), py::arg("m"), py::arg("arrangement"),
      "Lambda_{n,m}; selectors are ints, lists of ints or text such as '>=3'");
  m.def("profile", &profile_dict);
  m.def(
      "run_sequence",
      [](const std::string& op, const Arrangement& L, int max_steps, std::size_t max_lines, std::size_t profile_lines) {
        Budgets b;
        b.max_steps = max_steps;
        b.max_lines = max_lines;
        b.profile_lines = profile_lines;
        return to_py(trace_json(run_sequence(OperatorSpec::parse(op), L, b)));
      },
      py::arg("op"), py::arg("arrangement"), py::arg("max_steps") = 16, py::arg("max_lines") = 20000,
      py::arg("profile_lines") = 8000);
  m.def("orbit", [](const std::string& op, const Arrangement& L) {
    return orbit_over_finite_field(OperatorSpec::parse(op), L);
  });
  m.def("equivalent", [](const Arrangement& a, const Arrangement& b) { return projectively_equivalent(a, b).has_value(); });
  m.def("classify", [](const Arrangement& L) { return std::string(degenerate_class_name(classify_degenerate(L))); });
  m.def("matroid", [](const Arrangement& L) { return to_py(matroid_json(extract_matroid(L))); });
  m.def("matroid_isomorphic", [](const py::object& a, const py::object& b) {
    return matroid_isomorphic(matroid_from_json(from_py(a)), matroid_from_json(from_py(b)));
  });
  m.def(
      "render_svg",
      [](const std::vector<Arrangement>& layers, int chart) {
        std::vector<RenderLayer> ls;
        for (std::size_t i = 0; i < layers.size(); ++i) ls.push_back({layers[i], "step" + std::to_string(i)});
        RenderSpec s;
        s.chart = chart;
        return render_svg(ls, s).svg;
      },
      py::arg("layers"), py::arg("chart") = 2);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
