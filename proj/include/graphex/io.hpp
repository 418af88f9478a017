#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "graphex/graph.hpp"
#include "graphex/graphon.hpp"
#include "graphex/sequence.hpp"
#include "graphex/verify.hpp"

namespace graphex::io {

/// Parsed model file. Keys: I, S, W, epsilon, seed; anything else is rejected.
///   "S": "zero" | {"family": "exp"|"power", "params": [..], "scale": c}
///   "W": "zero" | {"family": name, "params": [..], "scale": c} | {"pixel": path}
/// Pixel paths are resolved relative to the model file.
struct ModelConfig {
  Graphex graphex;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
};

/// Throws Error(Config) on malformed documents, Error(Io) on unreadable files.
ModelConfig parseModel(const std::string& text, const std::filesystem::path& baseDir = {});
ModelConfig loadModel(const std::filesystem::path& path);

/// %.17g; round-trips every double.
std::string formatDouble(double x);

/// theta,theta_prime,component
void writeLabeledCsv(std::ostream& out, const LabeledGraph& g);
/// The size is taken as the largest label unless given.
LabeledGraph readLabeledCsv(std::istream& in, std::optional<double> size = std::nullopt);

/// "u v" per line, 1-based ids, in the graph's own order.
void writeEdgeList(std::ostream& out, const UnlabeledGraph& g);
/// Blank lines and lines starting with '#' are skipped.
UnlabeledGraph readEdgeList(std::istream& in);

/// First line cellwidth=<w>, then n rows of n comma-separated values.
void writePixelCsv(std::ostream& out, const PixelGraphon& pg);
PixelGraphon readPixelCsv(std::istream& in);

/// Plain PGM (P2), one pixel per cell, value v drawn as round(255 (1 - v)).
void writePgm(std::ostream& out, const PixelGraphon& pg);

/// Blocks "# step k @ tau=<t>" (k from 1) followed by the edges added at
/// step k; the tau part is omitted when jump times were stripped.
void writeSequence(std::ostream& out, const GraphSequence& seq);

/// suite,test,statistic,observed,threshold,pass,replicates,seed
void writeReportCsv(std::ostream& out, std::span<const TestReport> reports);
/// One JSON object per line with every TestReport field.
void writeReportRecords(std::ostream& out, std::span<const TestReport> reports);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace graphex::io
