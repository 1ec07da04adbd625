#include "greechie/cli.hpp"
#include "greechie/collapse.hpp"
#include "greechie/diagrams.hpp"
#include "greechie/error.hpp"
#include "greechie/generators.hpp"
#include "greechie/gls.hpp"
#include "greechie/parity.hpp"
#include "greechie/quantum.hpp"
#include "greechie/realization.hpp"
#include "greechie/rules.hpp"
#include "greechie/states.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace greechie;

namespace {

py::tuple to_tuple(const AtomPair& p) { return py::make_tuple(p.first, p.second); }

py::list pairs(const std::set<AtomPair>& s) {
  py::list out;
  for (const auto& p : s) out.append(to_tuple(p));
  return out;
}

Ray ray_from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Quad> comps;
  for (const auto& t : tokens) comps.push_back(parse_component(t));
  return Ray(std::move(comps));
}

std::vector<std::string> ray_tokens(const Ray& r) {
  std::vector<std::string> out;
  for (const auto& c : r.components()) out.push_back(c.to_token());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite quantum logics: exact realizations, two-valued states and KS obstructions";

  static py::exception<Error> base_error(m, "GreechieError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());

  py::class_<Quad>(m, "Quad", "Exact a + b*sqrt(2) with rational a, b")
      .def(py::init([](const std::string& token) { return parse_component(token); }), py::arg("token"))
      .def(py::init([](long long value) { return Quad(value); }), py::arg("value"))
      .def_property_readonly("token", &Quad::to_token)
      .def("__float__", &Quad::to_double)
      .def("is_zero", &Quad::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Quad& q) { return "Quad('" + q.to_token() + "')"; })
      .def("__str__", &Quad::to_token);

  m.def("inner_product",
        [](const std::vector<std::string>& r, const std::vector<std::string>& s) {
          return inner_product(ray_from_tokens(r), ray_from_tokens(s));
        },
        py::arg("r"), py::arg("s"), "Exact inner product of two rays given as component tokens");
  m.def("rays_collinear",
        [](const std::vector<std::string>& r, const std::vector<std::string>& s) {
          return rays_collinear(ray_from_tokens(r), ray_from_tokens(s));
        },
        py::arg("r"), py::arg("s"));

  py::class_<Logic>(m, "Logic")
      .def_property_readonly("dimension", &Logic::dimension)
      .def_property_readonly("atoms",
                             [](const Logic& l) {
                               py::list out;
                               for (const auto& a : l.atoms()) out.append(a.label);
                               return out;
                             })
      .def_property_readonly("contexts",
                             [](const Logic& l) {
                               py::list out;
                               for (const auto& c : l.contexts()) out.append(py::make_tuple(c.label, c.members));
                               return out;
                             })
      .def("ray",
           [](const Logic& l, const std::string& label) -> std::optional<std::vector<std::string>> {
             const auto& a = l.atom(label);
             if (!a.ray) return std::nullopt;
             return ray_tokens(*a.ray);
           })
      .def("__repr__", [](const Logic& l) {
        std::ostringstream os;
        os << "<Logic dim=" << l.dimension() << " atoms=" << l.atoms().size()
           << " contexts=" << l.contexts().size() << ">";
        return os.str();
      });

  m.def("parse_logic", &parse_logic, py::arg("text"));
  m.def("load_logic", [](const std::string& path) { return load_logic(path); }, py::arg("path"));
  m.def("serialize_logic", &serialize_logic, py::arg("logic"));
  m.def("make_star", &make_star, py::arg("d"));

  m.def("verify_realization", [](const Logic& l) {
    const auto r = verify_realization(l);
    py::list failures;
    for (const auto& c : r.contexts) {
      for (const auto& p : c.offending) {
        failures.append(py::make_tuple(c.context, to_tuple(p.atoms), p.product.to_token()));
      }
    }
    py::list collinear;
    for (const auto& p : r.collinear) collinear.append(to_tuple(p));
    py::dict d;
    d["passed"] = r.passed();
    d["orthogonal_contexts"] = r.orthogonal_contexts();
    d["context_count"] = r.contexts.size();
    d["failures"] = failures;
    d["collinear"] = collinear;
    return d;
  });

  m.def("complete_contexts",
        [](const std::vector<std::pair<std::string, std::vector<std::string>>>& vectors, int dim) {
          std::vector<LabeledRay> rays;
          for (const auto& [label, comps] : vectors) rays.push_back({label, ray_from_tokens(comps)});
          auto c = complete_contexts(rays, dim);
          return py::make_tuple(std::move(c.logic), c.partial_cliques);
        },
        py::arg("vectors"), py::arg("dim"));

  m.def("enumerate_states",
        [](const Logic& l, unsigned threads) {
          const auto r = enumerate_states(l, {threads});
          py::list states;
          for (const auto& s : r.states) states.append(s.bits());
          py::dict d;
          d["count"] = r.count;
          d["empty"] = r.empty;
          d["unital"] = r.unital;
          d["separating"] = r.separating;
          d["states"] = states;
          return d;
        },
        py::arg("logic"), py::arg("threads") = 0);

  m.def("derive_rules", [](const Logic& l) {
    const auto rules = derive_rules(enumerate_states(l), l);
    py::dict d;
    d["explosion"] = rules.explosion;
    d["one_zero"] = pairs(rules.one_zero);
    d["one_one"] = pairs(rules.one_one);
    d["equivalences"] = pairs(rules.equivalences);
    d["never_true"] = rules.never_true;
    return d;
  });

  m.def("parity_obstruction", [](const Logic& l) -> py::object {
    const auto cert = parity_obstruction(l);
    if (!cert) return py::none();
    py::dict d;
    d["context_count"] = cert->context_count;
    d["multiplicities"] = cert->multiplicities;
    return std::move(d);
  });

  m.def("infer_collapses", [](const Logic& l) {
    const auto r = infer_collapses(l);
    py::list ids;
    for (const auto& id : r.identifications) ids.append(py::make_tuple(to_tuple(id.atoms), id.witness));
    py::dict d;
    d["identifications"] = ids;
    d["contradiction"] = r.contradiction ? py::object(to_tuple(*r.contradiction)) : py::none();
    return d;
  });

  m.def("tkadlec_dual", [](const Logic& l) {
    const auto g = tkadlec_dual(l);
    py::list edges;
    for (const auto& e : g.edges) edges.append(py::make_tuple(e.first, e.second, e.shared));
    return py::make_tuple(g.nodes, edges);
  });

  m.def("emit_dot",
        [](const Logic& l, const std::string& mode) {
          if (mode != "greechie-incidence" && mode != "tkadlec") {
            throw py::value_error("mode must be 'greechie-incidence' or 'tkadlec'");
          }
          return emit_dot(l, mode == "tkadlec" ? DotMode::tkadlec : DotMode::greechie_incidence);
        },
        py::arg("logic"), py::arg("mode") = "greechie-incidence");

  m.def("joint_probability",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          if (a.size() != b.size()) throw py::value_error("vectors differ in length");
          const EntangledPair pair(static_cast<int>(a.size()));
          const auto jp = joint_probability(pair, a, b);
          py::dict d;
          d["prob_both"] = jp.prob_both;
          d["marginal_left"] = jp.marginal_left;
          d["marginal_right"] = jp.marginal_right;
          return d;
        },
        py::arg("a"), py::arg("b"),
        "Joint probability of projecting onto a and b on the maximally entangled state");

  m.def("falsification_report", [](const Logic& l) {
    const auto rules = derive_rules(enumerate_states(l), l);
    py::list rows;
    for (const auto& e : falsification_report(l, rules, EntangledPair(l.dimension()))) {
      py::dict d;
      d["kind"] = to_string(e.kind);
      d["atoms"] = to_tuple(e.atoms);
      d["classical"] = e.classical;
      d["quantum"] = e.quantum;
      d["violated"] = e.violated;
      rows.append(d);
    }
    return rows;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
