#include "graphex/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "graphex/error.hpp"

namespace graphex {
namespace {

void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

void requirePositive(double value, const char* what) {
  require(std::isfinite(value) && value > 0.0, ErrorCode::InvalidArgument,
          std::string(what) + " must be positive and finite");
}

// Smallest-ish V >= 0 with tail(V) <= budget for a nonincreasing tail.
double solveCutoff(const std::function<double(double)>& tail, double budget, double scale) {
  if (tail(0.0) <= budget) return 0.0;
  double hi = scale;
  while (tail(hi) > budget) {
    hi *= 2.0;
    require(std::isfinite(hi) && hi < 1e300, ErrorCode::TruncationUnavailable,
            "tail mass does not fall below the truncation budget");
  }
  double lo = hi / 2.0;
  if (tail(lo) <= budget) lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tail(mid) <= budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

constexpr const char* kExpProduct = "exp-product";
constexpr const char* kInversePower = "inverse-power-product";
constexpr const char* kCompactUniform = "compact-uniform";

}  // namespace

// ---------------------------------------------------------------------------
// PixelGraphon

PixelGraphon::PixelGraphon(std::size_t n, std::vector<double> values, double cellWidth)
    : n_(n), values_(std::move(values)), cellWidth_(cellWidth) {
  requirePositive(cellWidth_, "pixel cell width");
  require(values_.size() == n_ * n_, ErrorCode::InvalidArgument,
          "pixel matrix must have n*n entries");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = values_[i * n_ + j];
      require(v >= 0.0 && v <= 1.0, ErrorCode::InvalidArgument,
              "pixel values must lie in [0,1]");
      require(v == values_[j * n_ + i], ErrorCode::InvalidArgument,
              "pixel matrix must be symmetric");
    }
  }
}

bool PixelGraphon::isBinary() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

double PixelGraphon::value(double x, double y) const noexcept {
  if (!(x >= 0.0) || !(y >= 0.0)) return 0.0;
  const double edge = supportEdge();
  if (x >= edge || y >= edge) return 0.0;
  auto row = static_cast<std::size_t>(x / cellWidth_);
  auto col = static_cast<std::size_t>(y / cellWidth_);
  row = std::min(row, n_ - 1);
  col = std::min(col, n_ - 1);
  return at(row, col);
}

double PixelGraphon::l1Norm() const noexcept {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return cellWidth_ * cellWidth_ * sum;
}

PixelGraphon PixelGraphon::withCellWidth(double cellWidth) const {
  return PixelGraphon(n_, values_, cellWidth);
}

// ---------------------------------------------------------------------------
// GraphonSpec

GraphonSpec GraphonSpec::expProduct(double scale) {
  requirePositive(scale, "exp-product scale");
  return GraphonSpec(Builtin{Family::ExpProduct, {}, scale});
}

GraphonSpec GraphonSpec::inversePowerProduct(double a, double b, double scale) {
  requirePositive(a, "inverse-power exponent a");
  requirePositive(b, "inverse-power exponent b");
  requirePositive(scale, "inverse-power scale");
  return GraphonSpec(Builtin{Family::InversePowerProduct, {a, b}, scale});
}

GraphonSpec GraphonSpec::compactUniform(double p, double extent) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::InvalidArgument, "compact-uniform p must lie in [0,1]");
  requirePositive(extent, "compact-uniform extent");
  return GraphonSpec(Builtin{Family::CompactUniform, {p, extent}, 1.0});
}

GraphonSpec GraphonSpec::pixel(PixelGraphon pixel) {
  return GraphonSpec(std::move(pixel));
}

GraphonSpec GraphonSpec::builtin(std::string_view name, const std::vector<double>& params,
                                 double scale) {
  GraphonSpec spec;
  if (name == kExpProduct) {
    require(params.empty(), ErrorCode::Config, "exp-product takes no params");
    spec = expProduct(1.0);
  } else if (name == kInversePower) {
    require(params.size() == 1 || params.size() == 2, ErrorCode::Config,
            "inverse-power-product takes params [a] or [a, b]");
    spec = inversePowerProduct(params[0], params.size() == 2 ? params[1] : params[0], 1.0);
  } else if (name == kCompactUniform) {
    require(params.size() == 2, ErrorCode::Config, "compact-uniform takes params [p, c]");
    spec = compactUniform(params[0], params[1]);
  } else {
    throw Error(ErrorCode::Config, "unknown graphon family '" + std::string(name) + "'");
  }
  requirePositive(scale, "graphon scale");
  std::get<Builtin>(spec.kind_).scale = scale;
  return spec;
}

std::string GraphonSpec::name() const {
  if (isZero()) return "zero";
  if (pixelGraphon() != nullptr) return "pixel";
  switch (builtinFamily()->family) {
    case Family::ExpProduct: return kExpProduct;
    case Family::InversePowerProduct: return kInversePower;
    case Family::CompactUniform: return kCompactUniform;
  }
  return "unknown";
}

double GraphonSpec::value(double x, double y) const {
  if (isZero()) return 0.0;
  if (const auto* px = pixelGraphon()) return px->value(x, y);
  const Builtin& b = *builtinFamily();
  const double c = b.scale;
  switch (b.family) {
    case Family::ExpProduct:
      return std::exp(-(x + y) / c);
    case Family::InversePowerProduct: {
      const double a = b.params[0];
      const double bb = b.params[1];
      const double ux = 1.0 + x / c;
      const double uy = 1.0 + y / c;
      if (a == bb) return std::pow(ux, -a) * std::pow(uy, -a);
      return 0.5 * (std::pow(ux, -a) * std::pow(uy, -bb) + std::pow(ux, -bb) * std::pow(uy, -a));
    }
    case Family::CompactUniform: {
      const double edge = b.params[1] * c;
      return (x <= edge && y <= edge) ? b.params[0] : 0.0;
    }
  }
  return 0.0;
}

double GraphonSpec::l1Norm() const {
  if (isZero()) return 0.0;
  if (const auto* px = pixelGraphon()) return px->l1Norm();
  const Builtin& b = *builtinFamily();
  const double c = b.scale;
  switch (b.family) {
    case Family::ExpProduct:
      return c * c;
    case Family::InversePowerProduct: {
      const double a = b.params[0];
      const double bb = b.params[1];
      require(a > 1.0 && bb > 1.0, ErrorCode::NonIntegrable,
              "inverse-power-product needs exponents > 1 for a finite norm");
      return c * c / ((a - 1.0) * (bb - 1.0));
    }
    case Family::CompactUniform: {
      const double edge = b.params[1] * c;
      return b.params[0] * edge * edge;
    }
  }
  return 0.0;
}

double GraphonSpec::marginalSquaredNorm() const {
  if (isZero()) return 0.0;
  if (const auto* px = pixelGraphon()) {
    const double w = px->cellWidth();
    double total = 0.0;
    for (std::size_t i = 0; i < px->size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < px->size(); ++j) row += px->at(i, j);
      total += w * (w * row) * (w * row);
    }
    return total;
  }
  const Builtin& b = *builtinFamily();
  const double c = b.scale;
  switch (b.family) {
    case Family::ExpProduct:
      return c * c * c / 2.0;
    case Family::InversePowerProduct: {
      l1Norm();  // integrability check
      const double a = b.params[0];
      const double bb = b.params[1];
      const double na = c / (a - 1.0);
      const double nb = c / (bb - 1.0);
      return 0.25 * (nb * nb * c / (2.0 * a - 1.0) + na * na * c / (2.0 * bb - 1.0) +
                     2.0 * na * nb * c / (a + bb - 1.0));
    }
    case Family::CompactUniform: {
      const double edge = b.params[1] * c;
      return b.params[0] * b.params[0] * edge * edge * edge;
    }
  }
  return 0.0;
}

double GraphonSpec::tailMass(double cutoff) const {
  if (isZero()) return 0.0;
  const double v = std::max(cutoff, 0.0);
  if (const auto* px = pixelGraphon()) {
    double inside = 0.0;
    const double w = px->cellWidth();
    for (std::size_t i = 0; i < px->size(); ++i) {
      const double wi = std::clamp(v - static_cast<double>(i) * w, 0.0, w);
      if (wi == 0.0) continue;
      for (std::size_t j = 0; j < px->size(); ++j) {
        const double wj = std::clamp(v - static_cast<double>(j) * w, 0.0, w);
        inside += wi * wj * px->at(i, j);
      }
    }
    return std::max(0.0, 0.5 * (px->l1Norm() - inside));
  }
  const Builtin& b = *builtinFamily();
  const double c = b.scale;
  switch (b.family) {
    case Family::ExpProduct: {
      const double t = std::exp(-v / c);
      return 0.5 * c * c * (2.0 * t - t * t);
    }
    case Family::InversePowerProduct: {
      const double norm = l1Norm();
      const double u = 1.0 + v / c;
      const double ta = std::pow(u, 1.0 - b.params[0]);
      const double tb = std::pow(u, 1.0 - b.params[1]);
      return 0.5 * norm * (ta + tb - ta * tb);
    }
    case Family::CompactUniform: {
      const double edge = b.params[1] * c;
      if (v >= edge) return 0.0;
      return 0.5 * b.params[0] * (edge * edge - v * v);
    }
  }
  return 0.0;
}

double GraphonSpec::truncation(double budget) const {
  require(budget > 0.0, ErrorCode::InvalidArgument, "truncation budget must be positive");
  if (isZero()) return 0.0;
  if (const auto* px = pixelGraphon()) return px->supportEdge();
  const Builtin& b = *builtinFamily();
  const double c = b.scale;
  switch (b.family) {
    case Family::ExpProduct: {
      // 0.5 c^2 (2t - t^2) = budget with t = exp(-V/c)
      const double ratio = 2.0 * budget / (c * c);
      if (ratio >= 1.0) return 0.0;
      const double t = ratio / (1.0 + std::sqrt(1.0 - ratio));  // 1 - sqrt(1 - ratio), stably
      return -c * std::log(t);
    }
    case Family::InversePowerProduct: {
      try {
        l1Norm();
      } catch (const Error&) {
        throw Error(ErrorCode::TruncationUnavailable,
                    "inverse-power-product with exponents <= 1 has no finite tail");
      }
      return solveCutoff([this](double v) { return tailMass(v); }, budget, c);
    }
    case Family::CompactUniform:
      return b.params[1] * c;
  }
  return 0.0;
}

double GraphonSpec::envelope(double x) const {
  const Builtin* b = builtinFamily();
  if (b == nullptr) throw Error(ErrorCode::InvalidArgument, "graphon has no envelope");
  const double c = b->scale;
  switch (b->family) {
    case Family::ExpProduct:
      return std::exp(-x / c);
    case Family::InversePowerProduct:
      return std::pow(1.0 + x / c, -std::min(b->params[0], b->params[1]));
    case Family::CompactUniform:
      return x <= b->params[1] * c ? std::sqrt(b->params[0]) : 0.0;
  }
  return 0.0;
}

GraphonSpec GraphonSpec::dilated(double c) const {
  require(std::isfinite(c) && c > 0.0, ErrorCode::InvalidArgument, "dilation factor must be positive");
  if (isZero() || c == 1.0) return *this;
  if (const auto* px = pixelGraphon()) return GraphonSpec(px->withCellWidth(px->cellWidth() * c));
  Builtin b = *builtinFamily();
  b.scale *= c;
  return GraphonSpec(std::move(b));
}

// ---------------------------------------------------------------------------
// StarSpec

StarSpec StarSpec::exponential(double amplitude, double shift, double scale) {
  require(std::isfinite(amplitude) && amplitude >= 0.0, ErrorCode::InvalidArgument,
          "star amplitude must be nonnegative");
  require(std::isfinite(shift), ErrorCode::InvalidArgument, "star shift must be finite");
  requirePositive(scale, "star scale");
  return StarSpec(Builtin{Family::Exp, {amplitude, shift}, scale});
}

StarSpec StarSpec::power(double amplitude, double exponent, double scale) {
  require(std::isfinite(amplitude) && amplitude >= 0.0, ErrorCode::InvalidArgument,
          "star amplitude must be nonnegative");
  requirePositive(exponent, "star exponent");
  requirePositive(scale, "star scale");
  return StarSpec(Builtin{Family::Power, {amplitude, exponent}, scale});
}

StarSpec StarSpec::builtin(std::string_view name, const std::vector<double>& params, double scale) {
  require(params.size() == 2, ErrorCode::Config, "star families take params [a, b]");
  if (name == "exp") return exponential(params[0], params[1], scale);
  if (name == "power") return power(params[0], params[1], scale);
  throw Error(ErrorCode::Config, "unknown star family '" + std::string(name) + "'");
}

std::string StarSpec::name() const {
  if (isZero()) return "zero";
  return builtinFamily()->family == Family::Exp ? "exp" : "power";
}

double StarSpec::value(double x) const {
  if (isZero()) return 0.0;
  const Builtin& b = *builtinFamily();
  if (b.family == Family::Exp) return b.params[0] * std::exp(-(x / b.scale + b.params[1]));
  return b.params[0] * std::pow(1.0 + x / b.scale, -b.params[1]);
}

double StarSpec::l1Norm() const {
  if (isZero()) return 0.0;
  const Builtin& b = *builtinFamily();
  if (b.family == Family::Exp) return b.params[0] * std::exp(-b.params[1]) * b.scale;
  require(b.params[1] > 1.0, ErrorCode::NonIntegrable, "power star needs exponent > 1");
  return b.params[0] * b.scale / (b.params[1] - 1.0);
}

double StarSpec::squaredNorm() const {
  if (isZero()) return 0.0;
  const Builtin& b = *builtinFamily();
  const double a = b.params[0];
  if (b.family == Family::Exp) return a * a * std::exp(-2.0 * b.params[1]) * b.scale / 2.0;
  l1Norm();
  return a * a * b.scale / (2.0 * b.params[1] - 1.0);
}

double StarSpec::tailMass(double cutoff) const {
  if (isZero()) return 0.0;
  const double v = std::max(cutoff, 0.0);
  const Builtin& b = *builtinFamily();
  if (b.family == Family::Exp) return l1Norm() * std::exp(-v / b.scale);
  return l1Norm() * std::pow(1.0 + v / b.scale, 1.0 - b.params[1]);
}

double StarSpec::truncation(double budget) const {
  require(budget > 0.0, ErrorCode::InvalidArgument, "truncation budget must be positive");
  if (isZero()) return 0.0;
  const Builtin& b = *builtinFamily();
  double norm = 0.0;
  try {
    norm = l1Norm();
  } catch (const Error&) {
    throw Error(ErrorCode::TruncationUnavailable, "power star with exponent <= 1 has no finite tail");
  }
  if (norm <= budget) return 0.0;
  if (b.family == Family::Exp) return b.scale * std::log(norm / budget);
  return b.scale * (std::pow(norm / budget, 1.0 / (b.params[1] - 1.0)) - 1.0);
}

StarSpec StarSpec::dilated(double c) const {
  require(std::isfinite(c) && c > 0.0, ErrorCode::InvalidArgument, "dilation factor must be positive");
  if (isZero() || c == 1.0) return *this;
  Builtin b = *builtinFamily();
  b.params[0] *= c;
  b.scale *= c;
  return StarSpec(std::move(b));
}

// ---------------------------------------------------------------------------

bool Graphex::nontrivial() const {
  return isolatedRate + star.l1Norm() + graphon.l1Norm() > 0.0;
}

double evalGraphon(const GraphonSpec& spec, double x, double y) { return spec.value(x, y); }

double graphonL1(const GraphonSpec& spec) { return spec.l1Norm(); }

}  // namespace graphex
