#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "almg/algebra_io.hpp"
#include "almg/checks.hpp"
#include "almg/geometry.hpp"
#include "almg/intervals.hpp"
#include "almg/models.hpp"
#include "almg/parallel.hpp"
#include "almg/report.hpp"
#include "almg/search.hpp"

namespace py = pybind11;
using namespace almg;

namespace {

Op parse_op(const std::string& name) {
  for (Op op : kAllOps)
    if (op_name(op) == name) return op;
  throw std::invalid_argument("unknown operation '" + name + "' (add, join, meet, star)");
}

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json& j) { return j.dump(); }

std::vector<Axiom> axioms(const std::vector<std::string>& names) {
  std::vector<Axiom> out;
  for (const auto& n : names) out.push_back(parse_axiom(n));
  return out;
}

py::object optional_elem(std::optional<Elem> e) {
  return e ? py::object(py::int_(*e)) : py::object(py::none());
}

}  // namespace

PYBIND11_MODULE(_almg, m) {
  m.doc() = "Finite-model checks and search for autometrized lattice-ordered monoids";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<std::size_t, Elem, std::vector<Elem>, std::vector<Elem>, std::vector<Elem>,
                    std::vector<Elem>>(),
           py::arg("size"), py::arg("zero"), py::arg("add"), py::arg("join"), py::arg("meet"),
           py::arg("star"))
      .def_static("from_text", &parse_algebra, py::arg("text"))
      .def("to_text", [](const Algebra& a) { return format_algebra(a); })
      .def_property_readonly("size", &Algebra::size)
      .def_property_readonly("zero", &Algebra::zero)
      .def("table",
           [](const Algebra& a, const std::string& op) {
             auto t = a.table(parse_op(op));
             return std::vector<Elem>(t.begin(), t.end());
           })
      .def("apply",
           [](const Algebra& a, const std::string& op, Elem x, Elem y) {
             a.require_index(x);
             a.require_index(y);
             Elem v = a.at(parse_op(op), x, y);
             return v == kUndefined ? py::object(py::none()) : py::object(py::int_(v));
           })
      .def("leq", [](const Algebra& a, Elem x, Elem y) { return leq(a, x, y); })
      .def("is_partial", &Algebra::is_partial)
      .def("is_chain", [](const Algebra& a) { return is_chain(a); })
      .def(py::self == py::self)
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra size=" + std::to_string(a.size()) + " zero=" + std::to_string(a.zero()) +
               ">";
      });

  m.def("model", [](const std::string& spec) { return build_model(parse_model_spec(spec)); },
        py::arg("spec"));
  m.def("element_labels",
        [](const std::string& spec) { return element_labels(parse_model_spec(spec)); });

  m.def("_classify", [](const Algebra& a, std::size_t cap) {
    CheckOptions o;
    o.witness_cap = cap;
    return dump(to_json(classify(a, o)));
  });
  m.def("_check", [](const Algebra& a, const std::string& axiom, std::size_t cap) {
    CheckOptions o;
    o.witness_cap = cap;
    return dump(to_json(check_axiom(a, parse_axiom(axiom), o)));
  });
  m.def("_theorem_suite", [](const Algebra& a, std::size_t cap) {
    CheckOptions o;
    o.witness_cap = cap;
    return dump(to_json(run_theorem_suite(a, o)));
  });

  m.def("metric_between", &metric_between);
  m.def("lattice_between", &lattice_between);
  m.def("has_fixty",
        [](const Algebra& a, Elem x, Elem y, Elem z) { return has_fixty(a, Triangle(x, y, z)); });
  m.def("fixty_triangles", [](const Algebra& a) {
    std::vector<std::tuple<Elem, Elem, Elem>> out;
    for (const auto& t : find_fixty_triangles(a)) out.emplace_back(t.a(), t.b(), t.c());
    return out;
  });
  m.def("drl_difference",
        [](const Algebra& a, Elem x, Elem y) { return optional_elem(drl_difference(a, x, y)); });

  m.def("_search", [](std::size_t size, const std::vector<std::string>& require,
                      const std::vector<std::string>& violate, std::uint64_t budget, bool dedup,
                      bool first) {
    SearchSpec s;
    s.size = size;
    s.require = axioms(require);
    s.violate = axioms(violate);
    s.budget = budget;
    s.dedup = dedup;
    s.first_only = first;
    EnumerationResult r;
    {
      py::gil_scoped_release release;
      r = search_counterexample(s);
    }
    return dump(to_json(r));
  });
  m.def("_enumerate", [](std::size_t n, std::uint64_t budget, bool dedup) {
    EnumerationResult r;
    {
      py::gil_scoped_release release;
      r = enumerate_al_monoids(n, budget, dedup);
    }
    return dump(to_json(r));
  });
  m.def("canonical_form", [](const Algebra& a) { return py::bytes(canonical_form(a)); });

  m.def("iv_union", [](const std::string& a, const std::string& b) {
    return iv_union(parse_interval_set(a), parse_interval_set(b)).to_string();
  });
  m.def("iv_intersect", [](const std::string& a, const std::string& b) {
    return iv_intersect(parse_interval_set(a), parse_interval_set(b)).to_string();
  });
  m.def("iv_star", [](const std::string& a, const std::string& b) {
    return iv_star(parse_interval_set(a), parse_interval_set(b)).to_string();
  });
  m.def("_demo", [](const std::string& name) {
    if (name == "ex") return dump(to_json(demo_axiom4_failure()));
    if (name == "fixty") return dump(to_json(demo_fixty_nonzero_meet()));
    throw std::invalid_argument("unknown demo '" + name + "' (ex, fixty)");
  });

  m.def("set_threads", &set_thread_count, py::arg("n"));
  m.def("version", &tool_version);
}
