#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphex/error.hpp"
#include "graphex/estimate.hpp"
#include "graphex/io.hpp"
#include "graphex/sample.hpp"
#include "graphex/sequence.hpp"
#include "graphex/simulate.hpp"
#include "graphex/verify.hpp"

namespace py = pybind11;
using namespace graphex;

namespace {

using EdgeList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
using LabeledRow = std::tuple<double, double, std::string>;

EdgeList edgesOf(const UnlabeledGraph& g) { return EdgeList(g.edges().begin(), g.edges().end()); }

std::vector<LabeledRow> rowsOf(const LabeledGraph& g) {
  std::vector<LabeledRow> out;
  out.reserve(g.edgeCount());
  for (const auto& e : g.edges()) out.emplace_back(e.theta, e.thetaPrime, std::string(1, componentChar(e.component)));
  return out;
}

LabeledGraph labeledOf(const std::vector<LabeledRow>& rows, std::optional<double> size) {
  std::vector<LabeledEdge> edges;
  double top = 0.0;
  for (const auto& [a, b, c] : rows) {
    LabeledEdge e{a, b, Component::W};
    if (c == "S") {
      e.component = Component::S;
    } else if (c == "I") {
      e.component = Component::I;
    } else if (c != "W") {
      throw Error(ErrorCode::InvalidArgument, "component must be W, S or I");
    }
    top = std::max({top, a, b});
    edges.push_back(e);
  }
  return LabeledGraph(size.value_or(top), std::move(edges));
}

py::array_t<double> matrixOf(const PixelGraphon& pg) {
  const auto n = static_cast<py::ssize_t>(pg.size());
  py::array_t<double> out({n, n});
  auto m = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t j = 0; j < n; ++j) m(i, j) = pg.at(std::size_t(i), std::size_t(j));
  }
  return out;
}

PixelGraphon pixelOf(const py::array_t<double, py::array::c_style | py::array::forcecast>& matrix, double cellWidth) {
  if (matrix.ndim() != 2 || matrix.shape(0) != matrix.shape(1)) {
    throw Error(ErrorCode::InvalidArgument, "pixel matrix must be square");
  }
  const auto n = std::size_t(matrix.shape(0));
  return PixelGraphon(n, std::vector<double>(matrix.data(), matrix.data() + n * n), cellWidth);
}

py::dict statsOf(const StatVector& s) {
  py::dict d;
  d["e"] = s.e;
  d["v"] = s.v;
  d["triangles"] = s.triangles;
  d["max_degree"] = s.maxDegree;
  d["degree_histogram"] = s.degreeHistogram;
  return d;
}

py::dict reportOf(const TestReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["test"] = r.test;
  d["statistic"] = r.statistic;
  d["kind"] = toString(r.kind);
  d["observed"] = r.observed;
  d["threshold"] = r.threshold;
  d["p_value"] = r.pValue >= 0.0 ? py::object(py::float_(r.pValue)) : py::object(py::none());
  d["passed"] = r.pass;
  d["gating"] = r.gating;
  d["replicates"] = r.replicates;
  d["seeds"] = py::make_tuple(r.seedA, r.seedB);
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse exchangeable graphs from graphex processes";

  static py::exception<Error> error(m, "GraphexError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::handle(error.ptr())(py::str(e.what()));
      instance.attr("code") = toString(e.code());
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<Graphex>(m, "Graphex")
      .def_static(
          "from_json", [](const std::string& text) { return io::parseModel(text).graphex; }, py::arg("text"))
      .def_static(
          "load", [](const std::string& path) { return io::loadModel(path).graphex; }, py::arg("path"))
      .def_static("exp_product", &expProductGraphex)
      .def_static("three_component", &threeComponentGraphex)
      .def_static(
          "pixel",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& matrix, double cellWidth) {
            return pixelGraphex(pixelOf(matrix, cellWidth));
          },
          py::arg("matrix"), py::arg("cell_width"))
      .def_readonly("isolated_rate", &Graphex::isolatedRate)
      .def_property_readonly("graphon_l1", [](const Graphex& g) { return g.graphon.l1Norm(); })
      .def_property_readonly("star_l1", [](const Graphex& g) { return g.star.l1Norm(); })
      .def(
          "expected_edges",
          [](const Graphex& g, double s) {
            const auto c = expectedEdgeCounts(g, s);
            return py::dict(py::arg("W") = c.w, py::arg("S") = c.s, py::arg("I") = c.i);
          },
          py::arg("size"))
      .def("dilate", &dilateGraphex, py::arg("c"))
      .def("__repr__", [](const Graphex& g) {
        std::ostringstream os;
        os << "Graphex(I=" << g.isolatedRate << ", S=" << g.star.name() << ", W=" << g.graphon.name() << ")";
        return os.str();
      });

  m.def(
      "simulate",
      [](const Graphex& gx, double size, std::uint64_t seed, double epsilon) {
        return rowsOf(simulate(gx, SimConfig{size, epsilon, seed, false}).graph);
      },
      py::arg("graphex"), py::arg("size"), py::arg("seed") = 0, py::arg("epsilon") = 1e-3,
      "Labeled edges (theta, theta_prime, component) of the size-s process.");

  m.def(
      "forget_labels",
      [](const std::vector<LabeledRow>& rows) { return edgesOf(forgetLabels(labeledOf(rows, std::nullopt))); },
      py::arg("labeled"), "Zero-based unlabeled edge list in order of increasing label.");

  m.def(
      "p_sample",
      [](const EdgeList& edges, double p, std::uint64_t seed) {
        Rng rng(seed);
        return edgesOf(pSample(UnlabeledGraph::fromEdges(edges), p, rng));
      },
      py::arg("edges"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "empirical_graphon",
      [](const EdgeList& edges, std::optional<double> size) {
        const auto g = UnlabeledGraph::fromEdges(edges);
        const PixelGraphon pg = size ? dilatedEmpiricalGraphon(g, *size) : empiricalGraphon(g);
        return py::make_tuple(matrixOf(pg), pg.cellWidth());
      },
      py::arg("edges"), py::arg("size") = py::none(),
      "(matrix, cell_width); cell width 1/size, or 1/v(g) without a size.");

  m.def(
      "generate_from_pixel",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& matrix, double cellWidth, double r,
         std::uint64_t seed) {
        Rng rng(seed);
        return edgesOf(generateFromPixel(pixelOf(matrix, cellWidth), r, rng));
      },
      py::arg("matrix"), py::arg("cell_width"), py::arg("r"), py::arg("seed") = 0);

  m.def(
      "graph_sequence",
      [](const std::vector<LabeledRow>& rows) {
        const auto seq = graphSequence(labeledOf(rows, std::nullopt));
        std::vector<EdgeList> graphs;
        for (const auto& g : seq.graphs) graphs.push_back(edgesOf(g));
        return py::make_tuple(graphs, seq.jumpTimes);
      },
      py::arg("labeled"), "(graphs, jump_times) with vertex ids in order of first appearance.");

  m.def(
      "dilate_measure",
      [](const std::vector<LabeledRow>& rows, double c) { return rowsOf(dilateMeasure(labeledOf(rows, std::nullopt), c)); },
      py::arg("labeled"), py::arg("c"));

  m.def(
      "stats", [](const EdgeList& edges) { return statsOf(stats(UnlabeledGraph::fromEdges(edges))); },
      py::arg("edges"));

  m.def("suite_names", &suiteNames);

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> replicates, double alpha,
         std::optional<Graphex> model, unsigned threads) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.replicates = replicates;
        cfg.alpha = alpha;
        cfg.model = model;
        cfg.threads = threads;
        std::vector<TestReport> reports;
        {
          py::gil_scoped_release release;
          reports = runSuite(name, cfg);
        }
        py::list out;
        for (const auto& r : reports) out.append(reportOf(r));
        return py::make_tuple(out, suitePassed(reports));
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("replicates") = py::none(), py::arg("alpha") = 0.01,
      py::arg("model") = py::none(), py::arg("threads") = 0, "(reports, passed)");
}
