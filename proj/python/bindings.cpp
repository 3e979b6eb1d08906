#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paleytype/census.hpp"
#include "paleytype/cycles.hpp"
#include "paleytype/error.hpp"
#include "paleytype/graph.hpp"
#include "paleytype/graph_io.hpp"
#include "paleytype/report.hpp"
#include "paleytype/spectra.hpp"
#include "paleytype/symmetry.hpp"
#include "paleytype/verify.hpp"

namespace py = pybind11;
using namespace paleytype;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PrimeSet prime_set(const std::vector<std::int64_t>& primes) { return validate_primes(primes); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Paley-type graphs on products of Pythagorean primes";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<PrimeSet>(m, "PrimeSet")
      .def(py::init(&prime_set), py::arg("primes"))
      .def_property_readonly("primes",
                             [](const PrimeSet& ps) {
                               return std::vector<std::int64_t>(ps.primes().begin(), ps.primes().end());
                             })
      .def_property_readonly("modulus", &PrimeSet::modulus)
      .def("__len__", &PrimeSet::size)
      .def("__eq__", [](const PrimeSet& a, const PrimeSet& b) { return a == b; })
      .def("__repr__", [](const PrimeSet& ps) { return "PrimeSet(" + ps.to_string() + ")"; });
  py::implicitly_convertible<py::list, PrimeSet>();
  py::implicitly_convertible<py::tuple, PrimeSet>();

  m.def("validate_primes", &prime_set, py::arg("primes"));
  m.def("euler_phi", &euler_phi, py::arg("primes"));
  m.def("quadratic_residues", &quadratic_residues, py::arg("primes"));
  m.def("jacobi_symbol", &jacobi_symbol, py::arg("z"), py::arg("primes"));
  m.def("classify", [](std::int64_t z, const PrimeSet& ps) { return to_py(to_json(classify(z, ps))); },
        py::arg("z"), py::arg("primes"));
  m.def("crt_split", &crt_split, py::arg("z"), py::arg("primes"));
  m.def("crt_join", [](const std::vector<std::int64_t>& c, const PrimeSet& ps) { return crt_join(c, ps); },
        py::arg("coords"), py::arg("primes"));

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("label", &Graph::label)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             const auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("edges", &Graph::edges)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("to_dot", [](const Graph& g) { return to_dot(g); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + g.label() + ", V=" + std::to_string(g.order()) + ", E=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("build_paley_type", [](const PrimeSet& ps) { return build_paley_type(ps); }, py::arg("primes"));
  m.def("closed_form_spectrum", [](const PrimeSet& ps) { return to_py(to_json(closed_form_spectrum(ps))); },
        py::arg("primes"));
  m.def("numeric_spectrum",
        [](const Graph& g, double tol) {
          std::vector<std::pair<double, std::int64_t>> out;
          for (const auto& c : numeric_spectrum(g, tol)) out.emplace_back(c.value, c.multiplicity);
          return out;
        },
        py::arg("graph"), py::arg("tol") = 1e-6);
  m.def("full_census",
        [](const PrimeSet& ps) {
          const auto records = full_census(ps);
          return to_py(to_json(std::span<const CensusRecord>(records)));
        },
        py::arg("primes"));
  m.def("brute_force_aut_count", &brute_force_aut_count, py::arg("graph"), py::arg("budget") = kDefaultAutBudget);
  m.def("find_cycle_of_length",
        [](const Graph& g, int k, std::uint64_t budget, bool vertex_transitive) {
          CycleSearchOptions opts;
          opts.budget = budget;
          opts.vertex_transitive = vertex_transitive;
          const CycleSearchResult r = find_cycle_of_length(g, k, opts);
          py::dict d;
          d["status"] = std::string(to_string(r.status));
          d["cycle"] = r.cycle;
          d["nodes"] = r.nodes;
          return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("budget") = kDefaultCycleBudget,
        py::arg("vertex_transitive") = false);
  m.def("verify_json",
        [](const PrimeSet& ps, double tolerance, std::uint64_t budget, int max_connectivity_order,
           int max_aut_order, int max_cycle_order, int max_eigen_order, bool witnesses) {
          VerifyOptions opts;
          opts.tolerance = tolerance;
          opts.budget = budget;
          opts.max_connectivity_order = max_connectivity_order;
          opts.max_aut_order = max_aut_order;
          opts.max_cycle_order = max_cycle_order;
          opts.max_eigen_order = max_eigen_order;
          opts.witnesses = witnesses;
          py::gil_scoped_release release;
          return to_json(run_verify(ps, opts)).dump();
        },
        py::arg("primes"), py::arg("tolerance") = 1e-6, py::arg("budget") = 10'000'000,
        py::arg("max_connectivity_order") = 300, py::arg("max_aut_order") = 250, py::arg("max_cycle_order") = 250,
        py::arg("max_eigen_order") = 1200, py::arg("witnesses") = true);
}
