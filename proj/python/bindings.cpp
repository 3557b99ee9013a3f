#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sncdp/report.hpp"

namespace py = pybind11;
using namespace sncdp;

namespace {

std::string report_text(const std::string& command, Json inputs, const Evaluation& ev, bool intermediates) {
  Json r = report_header(command, std::move(inputs));
  r["results"] = ev.results;
  if (intermediates) r["intermediates"] = ev.intermediates;
  r["checks"] = ev.checks;
  return dump_report(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chow ring calculus and local invariants of snc del Pezzo surfaces";
  m.attr("engine_version") = kEngineVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ChowClass>(m, "ChowClass")
      .def("__str__", &ChowClass::to_string)
      .def("__repr__", [](const ChowClass& c) { return "ChowClass('" + c.to_string() + "')"; })
      .def("graded_part", &ChowClass::graded_part)
      .def("is_zero", &ChowClass::is_zero)
      .def("__add__", [](const ChowClass& a, const ChowClass& b) { return a + b; })
      .def("__sub__", [](const ChowClass& a, const ChowClass& b) { return a - b; })
      .def("__mul__", [](const ChowClass& a, const ChowClass& b) { return a * b; })
      .def("__neg__", [](const ChowClass& a) { return -a; })
      .def("__pow__", &ChowClass::pow)
      .def("__eq__", [](const ChowClass& a, const ChowClass& b) { return a == b; });

  py::class_<Variety>(m, "Variety")
      .def_readonly("dim", &Variety::dim)
      .def_readonly("label", &Variety::label)
      .def("cls", [](const Variety& v, const std::string& text) { return v.cls(text); })
      .def_property_readonly("generators",
                             [](const Variety& v) {
                               std::vector<std::string> out;
                               for (const auto& s : v.ring->variables()) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("tangent_ch", [](const Variety& v) { return v.tangent_ch.ch(); })
      .def_readonly("canonical_class", &Variety::canonical_class)
      .def("integrate", [](const Variety& v, const ChowClass& c) { return to_string(integrate(v, c)); })
      .def("euler_number", [](const Variety& v) { return euler_number(v).str(); })
      .def("weighted_euler", [](const Variety& v) { return weighted_euler_smooth(v).str(); })
      .def("chern_class", [](const Variety& v) { return ch_to_chern(v.tangent_ch); });

  m.def("projective_space", &projective_space, py::arg("n"), py::arg("variable") = "h");
  m.def("hirzebruch", &hirzebruch, py::arg("n"));
  m.def("point", &point);
  m.def("product", &product, py::arg("x"), py::arg("y"));
  m.def(
      "projective_bundle",
      [](const Variety& base, const std::string& total_chern, const std::string& fiber, const std::string& label) {
        return projective_bundle(base, {2, base.cls(total_chern)}, fiber, label).total;
      },
      py::arg("base"), py::arg("total_chern"), py::arg("fiber") = "xi", py::arg("label") = "");
  m.def("chern_to_ch", [](int rank, const ChowClass& c) { return chern_to_ch(rank, c).ch(); });
  m.def("ch_to_chern", [](const ChowClass& ch) { return ch_to_chern(KClass(ch)); });

  m.def(
      "classify_json",
      [](int rank, int n_max, int b_max) {
        Json r = report_header("classify", {{"rank", rank}, {"nmax", n_max}, {"bmax", b_max}});
        r["results"] = classification_results(classify(rank, n_max, b_max));
        return dump_report(r);
      },
      py::arg("rank"), py::arg("n_max") = 8, py::arg("b_max") = 8);
  m.def(
      "example_json",
      [](const std::string& name, bool intermediates) {
        return report_text("example", {{"name", name}, {"show_intermediates", intermediates}},
                           evaluate(builtin_document(name)), intermediates);
      },
      py::arg("name"), py::arg("show_intermediates") = false);
  m.def(
      "evaluate_setup_json",
      [](const std::string& text, bool intermediates) {
        return report_text("eval", {{"file", "<string>"}, {"show_intermediates", intermediates}},
                           evaluate(parse_setup(text)), intermediates);
      },
      py::arg("text"), py::arg("show_intermediates") = false);
  m.def("emit_setup", [](const std::string& name) { return serialize_setup(builtin_document(name)); });
  m.def("local_gw_genus0", [](const std::string& name) { return to_string(local_gw_genus0(builtin_example(name))); });
  m.def("example_names", &builtin_example_names);
}
