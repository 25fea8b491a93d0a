#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetakirch/covering.hpp"
#include "zetakirch/derivatives.hpp"
#include "zetakirch/errors.hpp"
#include "zetakirch/spanning.hpp"
#include "zetakirch/zeta.hpp"

namespace py = pybind11;
using namespace zetakirch;

namespace {

// Rationals cross the boundary as canonical "p/q" strings so nothing is
// rounded; polynomials as term-dict lists matching the CLI JSON layout.

py::list poly_terms(const BiPoly& p) {
  py::list out;
  for (const auto& [k, c] : p.terms()) {
    py::dict d;
    d["du"] = k.first;
    d["dt"] = k.second;
    d["coeff"] = c.str();
    out.append(d);
  }
  return out;
}

py::list laurent_terms(const LaurentPoly& p) {
  py::list out;
  for (const auto& [k, c] : p.terms()) {
    py::dict d;
    d["dt"] = k;
    d["coeff"] = c.str();
    out.append(d);
  }
  return out;
}

WeightedGraph graph_from_edges(int n,
                               const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [i, j, w] : edges) es.push_back({i, j, Rational::parse(w)});
  return WeightedGraph(n, std::move(es));
}

struct CoverContext {
  GroupData gd;
  VoltageAssignment alpha;
};

CoverContext cover_context(const WeightedGraph& g, const std::string& group_token,
                           const std::vector<std::string>& voltage_tokens) {
  GroupData gd = builtin_group(group_token);
  VoltageAssignment alpha = resolve_voltages(g, gd, voltage_tokens);
  return {std::move(gd), std::move(alpha)};
}

py::dict kirchhoff_dict(const WeightedGraph& g) {
  KirchhoffReport rep = kirchhoff_report(g);
  py::dict d;
  d["kappa_w"] = rep.kappa_w.str();
  py::list res;
  const int n = g.vertex_count();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      py::dict e;
      e["p"] = p;
      e["q"] = q;
      e["r"] = rep.resistances.at(p, q).str();
      res.append(e);
    }
  d["resistances"] = res;
  d["kf"] = rep.kf.str();
  d["kf_star"] = rep.kf_star.str();
  d["kf_plus"] = rep.kf_plus.str();
  d["kf_z"] = rep.kf_z.str();
  d["kf_z_poly"] = laurent_terms(rep.kf_z_poly);
  return d;
}

}  // namespace

PYBIND11_MODULE(_zetakirch, m) {
  m.doc() = "exact zeta determinants, weighted Kirchhoff indices and covering checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SingularError>(m, "SingularError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DisconnectedCoverError>(m, "DisconnectedCoverError",
                                                 PyExc_ValueError);
  py::register_exception<UnsupportedGroupError>(m, "UnsupportedGroupError",
                                                PyExc_ValueError);

  py::class_<WeightedGraph>(m, "Graph")
      .def_static("parse", &WeightedGraph::parse, py::arg("text"),
                  "parse a .wgr document (1-based vertices in the text)")
      .def_static("from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"),
                  "build from 0-based (i, j, weight-string) triples with i < j")
      .def_property_readonly("n", &WeightedGraph::vertex_count)
      .def_property_readonly("m", &WeightedGraph::edge_count)
      .def("total_weight", [](const WeightedGraph& g) { return g.total_weight().str(); })
      .def("degrees", &WeightedGraph::degrees)
      .def("weighted_degrees",
           [](const WeightedGraph& g) {
             std::vector<std::string> out;
             for (const auto& d : g.weighted_degrees()) out.push_back(d.str());
             return out;
           })
      .def("edges",
           [](const WeightedGraph& g) {
             std::vector<std::tuple<int, int, std::string>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w.str());
             return out;
           })
      .def("to_wgr", &WeightedGraph::to_wgr)
      .def("__repr__", [](const WeightedGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("weighted_complexity",
        [](const WeightedGraph& g) { return weighted_complexity(g).str(); });
  m.def("brute_force_complexity",
        [](const WeightedGraph& g) { return brute_force_complexity(g).str(); });
  m.def("resistance_distance", [](const WeightedGraph& g, int p, int q) {
    return resistance_distance(g, p, q).str();
  });
  m.def("kirchhoff_report", &kirchhoff_dict);
  m.def("spectral_kf_check", [](const WeightedGraph& g) {
    auto [exact, numeric] = spectral_kf_check(g);
    return py::make_tuple(exact.str(), numeric);
  });

  m.def("f_w_poly", [](const WeightedGraph& g) { return poly_terms(f_w_poly(g)); });
  m.def("zeta_edge_reciprocal",
        [](const WeightedGraph& g) { return poly_terms(zeta_edge_reciprocal(g)); });
  m.def("vertex_reciprocal", [](const WeightedGraph& g) {
    ZetaReciprocal z = vertex_reciprocal(g);
    return py::make_tuple(z.prefactor_exponent, poly_terms(z.core));
  });
  m.def("ihara_reciprocal", [](const WeightedGraph& g) {
    ZetaReciprocal z = ihara_reciprocal(g);
    return py::make_tuple(z.prefactor_exponent, poly_terms(z.core));
  });
  m.def("eval_f_w", [](const WeightedGraph& g, const std::string& u, const std::string& t) {
    return f_w_poly(g).eval(Rational::parse(u), Rational::parse(t)).str();
  });
  m.def("theorem10_check", [](const WeightedGraph& g) { return theorem10_check(g).ok; });

  m.def("verify_theorems_11_12",
        [](const WeightedGraph& g) { return verify_theorems_11_12(g); });
  m.def("curve_report", [](const WeightedGraph& g) {
    CurveReport rep = curve_report(g);
    py::dict d;
    d["d_t"] = laurent_terms(rep.d_t);
    d["d_u"] = laurent_terms(rep.d_u);
    d["d_tt"] = laurent_terms(rep.d_tt);
    d["d_tu"] = laurent_terms(rep.d_tu);
    d["d_uu"] = laurent_terms(rep.d_uu);
    d["all_ok"] = rep.all_ok;
    return d;
  });
  m.def("verify_corollary1", [](const WeightedGraph& g) {
    Corollary1Result res = verify_corollary1(g);
    py::dict d;
    d["dt"] = res.dt.str();
    d["expected"] = res.expected.str();
    d["ok"] = res.ok;
    return d;
  });
  m.def("verify_theorem13", [](const WeightedGraph& g) {
    Theorem13Result res = verify_theorem13(g);
    py::dict d;
    d["lhs"] = res.lhs.str();
    d["rhs"] = res.rhs.str();
    d["ok"] = res.ok;
    return d;
  });
  m.def("verify_hashimoto_northshield", [](const WeightedGraph& g) {
    HashimotoNorthshieldResult res = verify_hashimoto_northshield(g);
    py::dict d;
    d["value"] = res.value.str();
    d["expected"] = res.expected.str();
    d["ok"] = res.ok;
    return d;
  });

  m.def("builtin_group_elements", [](const std::string& token) {
    return builtin_group(token).element_tokens;
  });
  m.def(
      "derived_graph",
      [](const WeightedGraph& g, const std::string& group,
         const std::vector<std::string>& voltages) {
        CoverContext ctx = cover_context(g, group, voltages);
        return derived_graph(g, ctx.gd.group, ctx.alpha);
      },
      py::arg("graph"), py::arg("group"), py::arg("voltages"));
  m.def(
      "verify_theorem14",
      [](const WeightedGraph& g, const std::string& group,
         const std::vector<std::string>& voltages, std::uint64_t seed, double tol) {
        CoverContext ctx = cover_context(g, group, voltages);
        NumericConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        Theorem14Result res = verify_theorem14(g, ctx.gd, ctx.alpha, cfg);
        py::dict d;
        d["ok"] = res.ok;
        d["exact"] = res.exact;
        return d;
      },
      py::arg("graph"), py::arg("group"), py::arg("voltages"), py::arg("seed") = 20240915,
      py::arg("tol") = 1e-9);
  m.def(
      "verify_theorem15",
      [](const WeightedGraph& g, const std::string& group,
         const std::vector<std::string>& voltages, std::uint64_t seed, double tol) {
        CoverContext ctx = cover_context(g, group, voltages);
        NumericConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        Theorem15Result res = verify_theorem15(g, ctx.gd, ctx.alpha, cfg);
        py::dict d;
        d["ok"] = res.ok;
        d["exact"] = res.exact;
        d["direct"] = res.direct.str();
        d["formula"] = res.exact ? py::cast(res.formula_exact.str())
                                 : py::cast(res.formula_numeric);
        return d;
      },
      py::arg("graph"), py::arg("group"), py::arg("voltages"), py::arg("seed") = 20240915,
      py::arg("tol") = 1e-9);
  m.def(
      "verify_theorem16",
      [](const WeightedGraph& g, const std::string& group,
         const std::vector<std::string>& voltages, std::uint64_t seed, double tol) {
        CoverContext ctx = cover_context(g, group, voltages);
        NumericConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        Theorem16Result res = verify_theorem16(g, ctx.gd, ctx.alpha, cfg);
        py::dict d;
        d["ok"] = res.ok;
        d["exact"] = res.exact;
        d["variant1"] = res.variant1;
        d["variant2"] = res.variant2;
        d["variant3"] = res.variant3;
        d["cover_kfz_poly"] = laurent_terms(res.cover_kfz_poly);
        return d;
      },
      py::arg("graph"), py::arg("group"), py::arg("voltages"), py::arg("seed") = 20240915,
      py::arg("tol") = 1e-9);
  m.def(
      "verify_corollary3",
      [](const WeightedGraph& g, const std::string& group,
         const std::vector<std::string>& voltages, std::uint64_t seed, double tol) {
        CoverContext ctx = cover_context(g, group, voltages);
        NumericConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        Corollary3Result res = verify_corollary3(g, ctx.gd, ctx.alpha, cfg);
        py::dict d;
        d["ok"] = res.ok;
        d["exact"] = res.exact;
        d["lhs"] = res.lhs.str();
        d["rhs"] = res.rhs.str();
        return d;
      },
      py::arg("graph"), py::arg("group"), py::arg("voltages"), py::arg("seed") = 20240915,
      py::arg("tol") = 1e-9);
}
