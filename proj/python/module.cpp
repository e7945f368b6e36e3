#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccm/census.hpp"
#include "ccm/confmodel.hpp"
#include "ccm/embedding.hpp"
#include "ccm/errors.hpp"
#include "ccm/experiments.hpp"
#include "ccm/json_io.hpp"
#include "ccm/oracle.hpp"
#include "ccm/rate.hpp"

namespace py = pybind11;
using namespace ccm;

namespace {

// Round-trips through the json module so results match the CLI output.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_python(const BigInt& x) { return py::int_(py::str(x.str())); }

DegreeDistribution make_p(const std::map<Degree, double>& w) { return DegreeDistribution(w); }

TypeSequence make_type(const std::map<Degree, Count>& c) { return TypeSequence(c); }

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict graph_dict(const MultiGraph& g) {
  const auto view = components(g);
  py::dict d;
  d["vertices"] = g.vertex_count();
  d["edges"] = edge_pairs(g);
  d["components"] = view.count();
  d["simple"] = is_simple(g);
  return d;
}

MultiGraph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [u, v] : edges) e.push_back({u, v});
  return MultiGraph(n, std::move(e));
}

}  // namespace

PYBIND11_MODULE(_connected_cm, m) {
  m.doc() = "Connected configuration-model graphs with a given degree distribution";

  static py::exception<Error> error(m, "CcmError", PyExc_ValueError);
  static py::exception<BudgetExhausted> budget(m, "BudgetExhausted", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExhausted& e) {
      PyErr_SetString(budget.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def(
      "rate",
      [](const std::map<Degree, double>& p, double tol) { return to_python(to_json(rate_K(make_p(p), tol))); },
      py::arg("p"), py::arg("tol") = kDefaultBetaTolerance,
      "Extinction probability beta, giant degree law q and the rate K(p).");

  m.def(
      "solve_beta",
      [](const std::map<Degree, double>& p, double tol) {
        const auto s = solve_beta(make_p(p), tol);
        return py::make_tuple(s.beta, s.residual, s.upper_bound);
      },
      py::arg("p"), py::arg("tol") = kDefaultBetaTolerance, "(beta, residual, upper_bound)");

  m.def(
      "build_embedding",
      [](const std::map<Degree, double>& p, double eps, Count n) {
        return to_python(to_json(build_embedding(make_p(p), eps, n)));
      },
      py::arg("p"), py::arg("eps"), py::arg("n"));

  m.def(
      "integerize",
      [](const std::map<Degree, double>& p, Count n) { return integerize(make_p(p), n).counts(); },
      py::arg("p"), py::arg("n"));

  m.def(
      "sample_configuration",
      [](const std::map<Degree, Count>& t, std::uint64_t seed) {
        return graph_dict(project(sample_configuration(make_type(t), seed)));
      },
      py::arg("type"), py::arg("seed"), "Projected multigraph of one uniform configuration.");

  m.def(
      "sample_connected",
      [](const std::map<Degree, Count>& t, std::uint64_t seed, std::uint64_t budget) {
        const auto type = make_type(t);
        ConnectedSample s;
        {
          py::gil_scoped_release release;
          s = sample_uniform_connected(type, seed, budget);
        }
        auto d = graph_dict(s.graph);
        d["attempts"] = s.attempts;
        return d;
      },
      py::arg("type"), py::arg("seed"), py::arg("budget") = 1'000'000);

  m.def(
      "enumerate_counts",
      [](const std::map<Degree, Count>& t) {
        const auto r = enumerate_counts(make_type(t));
        py::dict d;
        d["total"] = to_python(r.total);
        d["connected"] = to_python(r.connected);
        d["simple"] = to_python(r.simple);
        d["simple_connected"] = to_python(r.simple_connected);
        d["graphs"] = to_python(r.graphs);
        d["connected_graphs"] = to_python(r.connected_graphs);
        return d;
      },
      py::arg("type"), "Exact counts by exhaustive enumeration (total degree <= 16).");

  m.def(
      "decomposition_check",
      [](const std::map<Degree, Count>& n, const std::vector<std::map<Degree, Count>>& family) {
        std::set<TypeSequence> f;
        for (const auto& x : family) f.insert(make_type(x));
        return decomposition_check(make_type(n), f);
      },
      py::arg("type"), py::arg("family"));

  m.def(
      "census",
      [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges, unsigned r) {
        return to_python(to_json(empirical_census(make_graph(n, edges), r)));
      },
      py::arg("vertices"), py::arg("edges"), py::arg("r"));

  m.def(
      "mu",
      [](const std::map<Degree, double>& p, unsigned r, double min_prob) {
        const auto dist = make_p(p);
        const double beta = solve_beta(dist).beta;
        const auto q = giant_degree_distribution(dist, beta).q;
        std::vector<std::pair<std::string, double>> out;
        for (const auto& t : enumerate_bp_trees(q, beta, r, min_prob)) {
          out.emplace_back(t.tree.code, t.probability);
        }
        return out;
      },
      py::arg("p"), py::arg("r"), py::arg("min_prob") = 1e-4,
      "(tree code, probability) for the limiting radius-r neighbourhoods.");

  m.def(
      "estimate_connectivity",
      [](const std::map<Degree, double>& p, Count n, std::uint64_t replicates, std::uint64_t seed,
         const std::string& method, unsigned threads) {
        const auto dist = make_p(p);
        const auto target = integerize(dist, n);
        if (threads == 0) threads = default_thread_count();
        if (method != "embedded" && method != "direct") {
          throw Error(ErrorCode::InvalidInput, "method must be 'embedded' or 'direct'");
        }
        ConnectivityEstimate e;
        {
          py::gil_scoped_release release;
          e = method == "direct" ? direct_connectivity(target, replicates, seed, threads)
                                 : embedded_connectivity(dist, target, replicates, seed, threads);
        }
        py::dict d;
        d["n"] = target.vertices();
        d["rate"] = e.rate;
        d["std_error"] = e.rate_std_error;
        d["hits"] = e.hits;
        d["replicates"] = e.replicates;
        d["log_probability"] = e.log_probability;
        d["method"] = e.method;
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("replicates"), py::arg("seed") = 1,
      py::arg("method") = "embedded", py::arg("threads") = 0,
      "Monte Carlo estimate of -log P(connected) / n on integerize(p, n).");
}
