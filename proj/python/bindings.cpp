#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charkit/catalog.hpp"
#include "charkit/errors.hpp"
#include "charkit/render.hpp"
#include "charkit/verify.hpp"

namespace py = pybind11;
using namespace charkit;

namespace {

Config make_config(std::size_t element_cap, std::size_t subgroup_cap, std::uint64_t seed) {
  Config c;
  c.element_cap = element_cap;
  c.subgroup_cap = subgroup_cap;
  c.seed = seed;
  return c;
}

// Numerator and denominator go through decimal strings so Python can build
// exact Fractions of any size.
py::object fraction(const Rational& q) {
  auto cls = py::module_::import("fractions").attr("Fraction");
  auto to_int = py::module_::import("builtins").attr("int");
  return cls(to_int(q.get_num().get_str()), to_int(q.get_den().get_str()));
}

// pybind11 holders cannot point to const, so Python sees groups through this
// thin wrapper.
struct Group {
  GroupPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_charkit, m) {
  m.doc() = "Exact character tables and classification of irreducible characters";

  py::register_exception<Error>(m, "CharkitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init<long>(), py::arg("value") = 0)
      .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("e"), py::arg("k") = 1)
      .def_property_readonly("conductor", &Cyclotomic::conductor)
      .def("is_zero", &Cyclotomic::is_zero)
      .def("as_rational",
           [](const Cyclotomic& c) -> py::object {
             auto q = c.as_rational();
             return q ? fraction(*q) : py::none();
           })
      .def("conj", &Cyclotomic::conj)
      .def("galois", &Cyclotomic::galois)
      .def("__complex__", &Cyclotomic::to_complex)
      .def("to_json", [](const Cyclotomic& c) { return to_json(c).dump(); })
      .def("__str__", &Cyclotomic::to_string)
      .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic(" + c.to_string() + ")"; })
      .def("__neg__", [](const Cyclotomic& a) { return -a; })
      .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
      .def("__add__", [](const Cyclotomic& a, long b) { return a + Cyclotomic(b); })
      .def("__radd__", [](const Cyclotomic& a, long b) { return a + Cyclotomic(b); })
      .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
      .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
      .def("__mul__", [](const Cyclotomic& a, long b) { return a * Cyclotomic(b); })
      .def("__rmul__", [](const Cyclotomic& a, long b) { return a * Cyclotomic(b); })
      .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
      .def("__hash__", [](const Cyclotomic& c) { return py::hash(py::str(c.to_string())); });

  py::class_<Group>(m, "Group")
      .def_property_readonly("name", [](const Group& g) { return g.ptr->name(); })
      .def_property_readonly("order", [](const Group& g) { return g.ptr->order(); })
      .def_property_readonly("degree", [](const Group& g) { return g.ptr->degree(); })
      .def_property_readonly("exponent", [](const Group& g) { return g.ptr->exponent(); })
      .def_property_readonly("generators",
                             [](const Group& g) {
                               std::vector<std::string> out;
                               for (const auto& p : g.ptr->generators()) out.push_back(p.to_cycles());
                               return out;
                             })
      .def("__repr__", [](const Group& g) {
        return "Group(" + g.ptr->name() + ", order " + std::to_string(g.ptr->order()) + ")";
      });

  m.def("group", [](const std::string& spec, std::size_t element_cap, std::size_t subgroup_cap,
                    std::uint64_t seed) {
    return Group{parse_group(spec, make_config(element_cap, subgroup_cap, seed))};
  }, py::arg("spec"), py::arg("element_cap") = 5000, py::arg("subgroup_cap") = 200,
        py::arg("seed") = 1);

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_property_readonly("group", [](const CharacterTable& t) { return Group{t.group()}; })
      .def_property_readonly("degrees", &CharacterTable::degrees)
      .def_property_readonly("class_sizes",
                             [](const CharacterTable& t) {
                               std::vector<std::size_t> out;
                               for (const auto& c : t.classes()) out.push_back(c.size);
                               return out;
                             })
      .def("row", [](const CharacterTable& t, std::size_t i) {
        if (i >= t.size()) throw py::index_error();
        return t[i].values();
      })
      .def("__len__", &CharacterTable::size)
      .def("check", &CharacterTable::check)
      .def("to_json", [](const CharacterTable& t) { return to_json(t).dump(); })
      .def("__str__", [](const CharacterTable& t) { return render_text(t); });

  m.def("character_table", [](const Group& g) {
    py::gil_scoped_release release;
    return character_table(g.ptr);
  }, py::arg("group"));

  m.def("classify_json", [](const Group& g) {
    py::gil_scoped_release release;
    GroupAnalysis ctx(g.ptr);
    return to_json(classify_group(ctx), ctx).dump();
  }, py::arg("group"));

  m.def("check_ids", &check_ids);

  m.def("verify_json_lines",
        [](const std::vector<std::string>& catalog, const std::vector<std::string>& checks,
           std::size_t element_cap, std::size_t subgroup_cap, std::uint64_t seed,
           std::optional<std::uint64_t> max_order) {
          py::gil_scoped_release release;
          auto results = run_suite(catalog, checks, make_config(element_cap, subgroup_cap, seed),
                                   max_order);
          return render_json_lines(results);
        },
        py::arg("catalog"), py::arg("checks"), py::arg("element_cap") = 5000,
        py::arg("subgroup_cap") = 200, py::arg("seed") = 1, py::arg("max_order") = py::none());

  m.def("default_catalog", &default_catalog);
}
