#include "graphex/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "graphex/error.hpp"

namespace graphex::io {
namespace {

using nlohmann::json;

[[noreturn]] void configError(const std::string& msg) { throw Error(ErrorCode::Config, msg); }

double parseReal(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(token, &used);
  } catch (const std::exception&) {
    configError("bad number in " + what + ": '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(x)) configError("bad number in " + what + ": '" + token + "'");
  return x;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> splitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) configError(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) configError(what + " must be finite");
  return x;
}

void onlyKeys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      configError("unknown key '" + key + "' in " + where);
    }
  }
}

struct FamilyDecl {
  std::string family;
  std::vector<double> params;
  double scale = 1.0;
};

FamilyDecl familyDecl(const json& j, const std::string& where) {
  onlyKeys(j, {"family", "params", "scale"}, where);
  if (!j.contains("family") || !j["family"].is_string()) configError(where + ".family must be a string");
  FamilyDecl d;
  d.family = j["family"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_array()) configError(where + ".params must be an array");
    for (const auto& p : j["params"]) d.params.push_back(number(p, where + ".params"));
  }
  if (j.contains("scale")) d.scale = number(j["scale"], where + ".scale");
  return d;
}

bool isZeroDecl(const json& j) {
  return j.is_null() || (j.is_string() && j.get<std::string>() == "zero") ||
         (j.is_number() && j.get<double>() == 0.0);
}

}  // namespace

ModelConfig parseModel(const std::string& text, const std::filesystem::path& baseDir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    configError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) configError("model must be a JSON object");
  onlyKeys(doc, {"I", "S", "W", "epsilon", "seed"}, "model");

  ModelConfig cfg;
  try {
    if (doc.contains("I")) {
      cfg.graphex.isolatedRate = number(doc["I"], "I");
      if (cfg.graphex.isolatedRate < 0.0) configError("I must be nonnegative");
    }
    if (doc.contains("S") && !isZeroDecl(doc["S"])) {
      if (!doc["S"].is_object()) configError("S must be \"zero\" or an object");
      const auto d = familyDecl(doc["S"], "S");
      cfg.graphex.star = StarSpec::builtin(d.family, d.params, d.scale);
    }
    if (doc.contains("W") && !isZeroDecl(doc["W"])) {
      const json& w = doc["W"];
      if (!w.is_object()) configError("W must be \"zero\" or an object");
      if (w.contains("pixel")) {
        onlyKeys(w, {"pixel"}, "W");
        if (!w["pixel"].is_string()) configError("W.pixel must be a file name");
        std::filesystem::path p = w["pixel"].get<std::string>();
        if (p.is_relative()) p = baseDir / p;
        std::ifstream in(p);
        if (!in) throw Error(ErrorCode::Io, "cannot read pixel file " + p.string());
        cfg.graphex.graphon = GraphonSpec::pixel(readPixelCsv(in));
      } else {
        const auto d = familyDecl(w, "W");
        cfg.graphex.graphon = GraphonSpec::builtin(d.family, d.params, d.scale);
      }
    }
    if (doc.contains("epsilon")) {
      const double eps = number(doc["epsilon"], "epsilon");
      if (!(eps > 0.0)) configError("epsilon must be positive");
      cfg.epsilon = eps;
    }
    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_integer() || (doc["seed"].is_number_integer() && !doc["seed"].is_number_unsigned() &&
                                               doc["seed"].get<std::int64_t>() < 0)) {
        configError("seed must be a nonnegative integer");
      }
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Io) throw;
    throw Error(ErrorCode::Config, e.what());
  }
  if (!cfg.graphex.nontrivial()) configError("graphex is trivial: I + |S|_1 + |W|_1 must be positive");
  return cfg;
}

ModelConfig loadModel(const std::filesystem::path& path) {
  return parseModel(readFile(path), path.parent_path());
}

std::string formatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void writeLabeledCsv(std::ostream& out, const LabeledGraph& g) {
  out << "theta,theta_prime,component\n";
  for (const auto& e : g.edges()) {
    out << formatDouble(e.theta) << ',' << formatDouble(e.thetaPrime) << ',' << componentChar(e.component)
        << '\n';
  }
}

LabeledGraph readLabeledCsv(std::istream& in, std::optional<double> size) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "theta,theta_prime,component") {
    configError("labeled CSV must start with theta,theta_prime,component");
  }
  std::vector<LabeledEdge> edges;
  double maxLabel = 0.0;
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (trim(line).empty()) continue;
    const auto cells = splitCsv(line);
    const std::string where = "line " + std::to_string(lineNo);
    if (cells.size() != 3) configError(where + ": expected 3 fields");
    LabeledEdge e;
    e.theta = parseReal(cells[0], where);
    e.thetaPrime = parseReal(cells[1], where);
    if (e.theta < 0.0 || e.thetaPrime < 0.0) configError(where + ": labels must be nonnegative");
    if (cells[2] == "W") {
      e.component = Component::W;
    } else if (cells[2] == "S") {
      e.component = Component::S;
    } else if (cells[2] == "I") {
      e.component = Component::I;
    } else {
      configError(where + ": component must be W, S or I");
    }
    maxLabel = std::max({maxLabel, e.theta, e.thetaPrime});
    edges.push_back(e);
  }
  try {
    return LabeledGraph(size.value_or(maxLabel), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, e.what());
  }
}

void writeEdgeList(std::ostream& out, const UnlabeledGraph& g) {
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

UnlabeledGraph readEdgeList(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ss(t);
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest) || u < 1 || v < 1) {
      configError("line " + std::to_string(lineNo) + ": expected two positive integer ids");
    }
    edges.emplace_back(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v));
  }
  return UnlabeledGraph::fromEdges(edges);
}

void writePixelCsv(std::ostream& out, const PixelGraphon& pg) {
  out << "cellwidth=" << formatDouble(pg.cellWidth()) << '\n';
  const std::size_t n = pg.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << formatDouble(pg.at(i, j));
    }
    out << '\n';
  }
}

PixelGraphon readPixelCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) configError("pixel file is empty");
  const std::string head = trim(line);
  const std::string prefix = "cellwidth=";
  if (head.rfind(prefix, 0) != 0) configError("pixel file must start with cellwidth=<w>");
  const double width = parseReal(head.substr(prefix.size()), "cellwidth");
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cells = splitCsv(line);
    if (rows == 0) cols = cells.size();
    if (cells.size() != cols) configError("pixel row " + std::to_string(rows + 1) + " has the wrong length");
    for (const auto& c : cells) values.push_back(parseReal(c, "pixel row " + std::to_string(rows + 1)));
    ++rows;
  }
  if (rows != cols) configError("pixel matrix must be square");
  try {
    return PixelGraphon(rows, std::move(values), width);
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, e.what());
  }
}

void writePgm(std::ostream& out, const PixelGraphon& pg) {
  const std::size_t n = pg.size();
  out << "P2\n" << n << ' ' << n << "\n255\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << static_cast<int>(std::lround(255.0 * (1.0 - pg.at(i, j))));
    }
    out << '\n';
  }
}

void writeSequence(std::ostream& out, const GraphSequence& seq) {
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    out << "# step " << k + 1;
    if (k < seq.jumpTimes.size()) out << " @ tau=" << formatDouble(seq.jumpTimes[k]);
    out << '\n';
    for (const auto& [u, v] : seq.steps[k]) out << u + 1 << ' ' << v + 1 << '\n';
  }
}

void writeReportCsv(std::ostream& out, std::span<const TestReport> reports) {
  out << "suite,test,statistic,observed,threshold,pass,replicates,seed\n";
  for (const auto& r : reports) {
    out << r.suite << ',' << r.test << ',' << r.statistic << ',' << formatDouble(r.observed) << ','
        << formatDouble(r.threshold) << ',' << (r.pass ? "true" : "false") << ',' << r.replicates << ','
        << r.seedA;
    if (r.seedB != r.seedA) out << ':' << r.seedB;
    out << '\n';
  }
}

void writeReportRecords(std::ostream& out, std::span<const TestReport> reports) {
  for (const auto& r : reports) {
    json j = {{"suite", r.suite},
              {"test", r.test},
              {"statistic", r.statistic},
              {"kind", toString(r.kind)},
              {"observed", r.observed},
              {"threshold", r.threshold},
              {"pass", r.pass},
              {"gating", r.gating},
              {"replicates", r.replicates},
              {"seed_a", r.seedA},
              {"seed_b", r.seedB},
              {"detail", r.detail}};
    if (r.pValue >= 0.0) j["p_value"] = r.pValue;
    out << j.dump() << '\n';
  }
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace graphex::io
