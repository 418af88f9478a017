// graphex: simulate, subsample, estimate and verify graphex processes.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or config,
// 3 file I/O failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphex/error.hpp"
#include "graphex/estimate.hpp"
#include "graphex/io.hpp"
#include "graphex/sample.hpp"
#include "graphex/sequence.hpp"
#include "graphex/simulate.hpp"
#include "graphex/verify.hpp"

namespace fs = std::filesystem;
using namespace graphex;

namespace {

constexpr int kOk = 0;
constexpr int kTestFailure = 1;
constexpr int kConfigError = 2;
constexpr int kIoError = 3;

std::uint64_t resolveSeed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> fromModel = {}) {
  if (flag) return *flag;
  if (fromModel) return *fromModel;
  if (const char* env = std::getenv("GRAPHEX_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::Config, "GRAPHEX_SEED is not an unsigned integer");
  }
  return 0;
}

std::string withSuffix(const std::string& prefix, const char* suffix) { return prefix + suffix; }

std::string render(const auto& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

UnlabeledGraph loadEdgeList(const std::string& path) {
  std::istringstream in(io::readFile(path));
  return io::readEdgeList(in);
}

int runSimulate(const std::string& modelPath, double size, std::optional<std::uint64_t> seedFlag,
                std::optional<double> epsFlag, const std::string& out) {
  const io::ModelConfig model = io::loadModel(modelPath);
  if (!(size > 0.0)) throw Error(ErrorCode::Config, "--size must be positive");
  SimConfig cfg;
  cfg.size = size;
  cfg.seed = resolveSeed(seedFlag, model.seed);
  cfg.epsilon = epsFlag.value_or(model.epsilon.value_or(1e-3));
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::Config, "--epsilon must be positive");

  const SimResult res = simulate(model.graphex, cfg);
  const UnlabeledGraph unlabeled = forgetLabels(res.graph);
  std::size_t w = 0, s = 0, i = 0;
  for (const auto& e : res.graph.edges()) {
    if (e.component == Component::W) ++w;
    if (e.component == Component::S) ++s;
    if (e.component == Component::I) ++i;
  }
  const nlohmann::ordered_json manifest = {
      {"command", "simulate"},
      {"model", modelPath},
      {"seed", cfg.seed},
      {"epsilon", cfg.epsilon},
      {"size", cfg.size},
      {"counts", {{"W", w}, {"S", s}, {"I", i}}},
      {"edges", res.graph.edgeCount()},
      {"vertices", unlabeled.vertexCount()},
      {"graphon_cutoff", res.graphonCutoff},
      {"star_cutoff", res.starCutoff}};

  io::writeFile(withSuffix(out, ".labeled.csv"), render([&](std::ostream& os) { io::writeLabeledCsv(os, res.graph); }));
  io::writeFile(withSuffix(out, ".edges"), render([&](std::ostream& os) { io::writeEdgeList(os, unlabeled); }));
  io::writeFile(withSuffix(out, ".manifest.json"), manifest.dump(2) + "\n");
  return kOk;
}

int runSample(const std::string& graphPath, double p, std::optional<std::uint64_t> seedFlag, const std::string& out) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::Config, "--p must lie in [0, 1]");
  const UnlabeledGraph g = loadEdgeList(graphPath);
  const std::uint64_t seed = resolveSeed(seedFlag);
  Rng rng(seed);
  const UnlabeledGraph sampled = pSample(g, p, rng);
  const nlohmann::ordered_json manifest = {{"command", "sample"},
                                           {"input", graphPath},
                                           {"p", p},
                                           {"seed", seed},
                                           {"edges", sampled.edgeCount()},
                                           {"vertices", sampled.vertexCount()}};
  io::writeFile(withSuffix(out, ".edges"), render([&](std::ostream& os) { io::writeEdgeList(os, sampled); }));
  io::writeFile(withSuffix(out, ".manifest.json"), manifest.dump(2) + "\n");
  return kOk;
}

int runEstimate(const std::string& graphPath, std::optional<double> size, const std::string& out) {
  const UnlabeledGraph g = loadEdgeList(graphPath);
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "cannot estimate from an empty graph");
  if (size && !(*size > 0.0)) throw Error(ErrorCode::Config, "--size must be positive");
  const PixelGraphon pg = size ? dilatedEmpiricalGraphon(g, *size) : empiricalGraphon(g);
  io::writeFile(withSuffix(out, ".pixel.csv"), render([&](std::ostream& os) { io::writePixelCsv(os, pg); }));
  io::writeFile(withSuffix(out, ".pgm"), render([&](std::ostream& os) { io::writePgm(os, pg); }));
  return kOk;
}

int runSequence(const std::string& labeledPath, bool stripTimes, const std::string& out) {
  std::istringstream in(io::readFile(labeledPath));
  const LabeledGraph g = io::readLabeledCsv(in);
  GraphSequence seq = graphSequence(g);
  if (stripTimes) seq = seq.withoutJumpTimes();
  io::writeFile(out, render([&](std::ostream& os) { io::writeSequence(os, seq); }));
  return kOk;
}

struct VerifyOptions {
  std::string suite;
  std::string model;
  std::optional<std::size_t> replicates;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string graph;
  std::vector<double> ratios;
  std::optional<double> size;
  std::optional<double> probe;
  std::optional<double> epsilon;
  double alpha = 0.01;
  unsigned threads = 0;
};

int runVerify(const VerifyOptions& opt) {
  const auto& names = suiteNames();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end()) {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + opt.suite + "'");
  }
  SuiteConfig cfg;
  std::optional<std::uint64_t> modelSeed;
  if (!opt.model.empty()) {
    io::ModelConfig model = io::loadModel(opt.model);
    cfg.model = model.graphex;
    cfg.epsilon = model.epsilon;
    modelSeed = model.seed;
  }
  cfg.seed = resolveSeed(opt.seed, modelSeed);
  cfg.replicates = opt.replicates;
  if (opt.epsilon) cfg.epsilon = opt.epsilon;
  cfg.size = opt.size;
  cfg.probe = opt.probe;
  cfg.ratios = opt.ratios;
  cfg.alpha = opt.alpha;
  cfg.threads = opt.threads;
  if (!opt.graph.empty()) cfg.graph = loadEdgeList(opt.graph);

  const std::vector<TestReport> reports = runSuite(opt.suite, cfg);
  const std::string csv = render([&](std::ostream& os) { io::writeReportCsv(os, reports); });
  if (!opt.out.empty()) {
    io::writeFile(withSuffix(opt.out, ".csv"), csv);
    io::writeFile(withSuffix(opt.out, ".records.jsonl"),
                  render([&](std::ostream& os) { io::writeReportRecords(os, reports); }));
  }
  std::cout << csv;
  const bool ok = suitePassed(reports);
  std::cout << opt.suite << ": " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kTestFailure;
}

int exitCodeFor(const Error& e) { return e.code() == ErrorCode::Io ? kIoError : kConfigError; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate, subsample and estimate sparse exchangeable graphs"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out;

  auto* sim = app.add_subcommand("simulate", "Simulate a graphex process of a given size");
  std::string modelPath;
  double size = 0.0;
  std::optional<double> epsilon;
  sim->add_option("model", modelPath, "Model file (JSON)")->required();
  sim->add_option("--size,-s", size, "Size s of the process")->required();
  sim->add_option("--seed", seed, "Seed (default: model seed, then GRAPHEX_SEED, then 0)");
  sim->add_option("--epsilon", epsilon, "Truncation budget (expected lost edges)");
  sim->add_option("--out,-o", out, "Output prefix")->required();

  auto* smp = app.add_subcommand("sample", "p-sample an unlabeled edge list");
  std::string graphPath;
  double p = 1.0;
  smp->add_option("graph", graphPath, "Edge list")->required();
  smp->add_option("--p", p, "Vertex retention probability")->required();
  smp->add_option("--seed", seed, "Seed (default: GRAPHEX_SEED, then 0)");
  smp->add_option("--out,-o", out, "Output prefix")->required();

  auto* est = app.add_subcommand("estimate", "Dilated empirical graphon of an edge list");
  std::optional<double> estSize;
  bool noSize = false;
  est->add_option("graph", graphPath, "Edge list")->required();
  auto* sizeOpt = est->add_option("--size,-s", estSize, "Known size s (cell width 1/s)");
  auto* noSizeOpt = est->add_flag("--no-size", noSize, "Unknown size: cell width 1/v(g)");
  sizeOpt->excludes(noSizeOpt);
  est->add_option("--out,-o", out, "Output prefix")->required();

  auto* seqCmd = app.add_subcommand("sequence", "Graph sequence of a labeled edge CSV");
  std::string labeledPath;
  bool strip = false;
  seqCmd->add_option("labeled", labeledPath, "Labeled CSV")->required();
  seqCmd->add_flag("--strip-times", strip, "Omit jump times");
  seqCmd->add_option("--out,-o", out, "Output file")->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  VerifyOptions vopt;
  ver->add_option("--suite", vopt.suite, "Suite name")->required();
  ver->add_option("--model", vopt.model, "Model file (JSON)");
  ver->add_option("--replicates", vopt.replicates, "Replicates per ensemble");
  ver->add_option("--seed", vopt.seed, "Master seed");
  ver->add_option("--out,-o", vopt.out, "Report prefix (.csv and .records.jsonl)");
  ver->add_option("--graph", vopt.graph, "Edge list for coupling-bounds");
  ver->add_option("--ratios", vopt.ratios, "r/s ratios for coupling-bounds")->delimiter(',');
  ver->add_option("--size", vopt.size, "Size override");
  ver->add_option("--probe", vopt.probe, "Probe size or dilation factor override");
  ver->add_option("--epsilon", vopt.epsilon, "Truncation budget");
  ver->add_option("--alpha", vopt.alpha, "Per-test significance level");
  ver->add_option("--threads", vopt.threads, "Worker threads (0: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (sim->parsed()) return runSimulate(modelPath, size, seed, epsilon, out);
    if (smp->parsed()) return runSample(graphPath, p, seed, out);
    if (est->parsed()) {
      if (!estSize && !noSize) throw Error(ErrorCode::Config, "estimate needs --size or --no-size");
      return runEstimate(graphPath, estSize, out);
    }
    if (seqCmd->parsed()) return runSequence(labeledPath, strip, out);
    if (ver->parsed()) return runVerify(vopt);
  } catch (const Error& e) {
    std::cerr << "graphex: " << e.what() << '\n';
    return exitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "graphex: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
