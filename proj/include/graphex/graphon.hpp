#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace graphex {

/// Step-function graphon: an n x n symmetric matrix of values in [0,1], each
/// cell a square of side cellWidth. Support is [0, n * cellWidth)^2.
class PixelGraphon {
 public:
  PixelGraphon() = default;
  /// values is row-major n*n. Throws InvalidArgument on asymmetry, values
  /// outside [0,1] or a nonpositive cell width.
  PixelGraphon(std::size_t n, std::vector<double> values, double cellWidth);

  std::size_t size() const noexcept { return n_; }
  double cellWidth() const noexcept { return cellWidth_; }
  double supportEdge() const noexcept { return static_cast<double>(n_) * cellWidth_; }
  double at(std::size_t row, std::size_t col) const { return values_[row * n_ + col]; }
  const std::vector<double>& values() const noexcept { return values_; }
  /// True when every entry is exactly 0 or 1.
  bool isBinary() const noexcept;

  /// Cell value containing (x, y); 0 outside the support.
  double value(double x, double y) const noexcept;
  /// cellWidth^2 * sum of entries.
  double l1Norm() const noexcept;
  PixelGraphon withCellWidth(double cellWidth) const;

  friend bool operator==(const PixelGraphon&, const PixelGraphon&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  double cellWidth_ = 1.0;
};

/// Symmetric graphon W : R+^2 -> [0,1].
///
/// Builtin families carry an internal scale c so that they are closed under
/// dilation (x, y) -> W(x/c, y/c):
///   exp-product            W = exp(-(x + y) / c)
///   inverse-power-product  W = [(1+x/c)^-a (1+y/c)^-b + (1+x/c)^-b (1+y/c)^-a] / 2
///   compact-uniform        W = p 1[x <= k c] 1[y <= k c]        params {p, k}
/// The inverse-power form is symmetrised so that a != b stays a valid graphon;
/// for a == b it is the plain product.
class GraphonSpec {
 public:
  enum class Family { ExpProduct, InversePowerProduct, CompactUniform };

  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };
  struct Builtin {
    Family family;
    std::vector<double> params;
    double scale = 1.0;
    friend bool operator==(const Builtin&, const Builtin&) = default;
  };

  GraphonSpec() = default;  // zero graphon

  static GraphonSpec zero() { return {}; }
  static GraphonSpec expProduct(double scale = 1.0);
  static GraphonSpec inversePowerProduct(double a, double b, double scale = 1.0);
  static GraphonSpec compactUniform(double p, double extent);
  static GraphonSpec pixel(PixelGraphon pixel);
  /// Lookup by family name as used in model files.
  static GraphonSpec builtin(std::string_view name, const std::vector<double>& params,
                             double scale = 1.0);

  bool isZero() const noexcept { return std::holds_alternative<Zero>(kind_); }
  const PixelGraphon* pixelGraphon() const noexcept { return std::get_if<PixelGraphon>(&kind_); }
  const Builtin* builtinFamily() const noexcept { return std::get_if<Builtin>(&kind_); }
  std::string name() const;

  double value(double x, double y) const;
  /// Integral of W over R+^2. Throws NonIntegrable.
  double l1Norm() const;
  /// Integral over R+ of mu(x)^2 where mu(x) = int W(x, y) dy.
  double marginalSquaredNorm() const;
  /// Half the mass of W outside [0,V]^2: the expected number of W-edges per
  /// unit of s^2 that involve a latent point with mark above V.
  double tailMass(double cutoff) const;
  /// Smallest cutoff V with tailMass(V) <= budget. Throws TruncationUnavailable.
  double truncation(double budget) const;
  /// Nonincreasing h with W(x, y) <= h(x) h(y); only builtin families have one.
  bool hasEnvelope() const noexcept { return builtinFamily() != nullptr; }
  double envelope(double x) const;

  /// (x, y) -> W(x/c, y/c).
  GraphonSpec dilated(double c) const;

  friend bool operator==(const GraphonSpec&, const GraphonSpec&) = default;

 private:
  explicit GraphonSpec(std::variant<Zero, Builtin, PixelGraphon> kind) : kind_(std::move(kind)) {}
  std::variant<Zero, Builtin, PixelGraphon> kind_;
};

/// Integrable star intensity S : R+ -> R+.
///   exp    S = a exp(-(x/c + b))       params {a, b}
///   power  S = a (1 + x/c)^-k          params {a, k}
/// Dilation x -> c' S(x/c') multiplies a by c' and the scale by c'.
class StarSpec {
 public:
  enum class Family { Exp, Power };

  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };
  struct Builtin {
    Family family;
    std::vector<double> params;
    double scale = 1.0;
    friend bool operator==(const Builtin&, const Builtin&) = default;
  };

  StarSpec() = default;

  static StarSpec zero() { return {}; }
  static StarSpec exponential(double amplitude, double shift, double scale = 1.0);
  static StarSpec power(double amplitude, double exponent, double scale = 1.0);
  static StarSpec builtin(std::string_view name, const std::vector<double>& params,
                          double scale = 1.0);

  bool isZero() const noexcept { return std::holds_alternative<Zero>(kind_); }
  const Builtin* builtinFamily() const noexcept { return std::get_if<Builtin>(&kind_); }
  std::string name() const;

  double value(double x) const;
  double l1Norm() const;
  double squaredNorm() const;
  /// Integral of S over (V, inf).
  double tailMass(double cutoff) const;
  double truncation(double budget) const;
  StarSpec dilated(double c) const;

  friend bool operator==(const StarSpec&, const StarSpec&) = default;

 private:
  explicit StarSpec(std::variant<Zero, Builtin> kind) : kind_(std::move(kind)) {}
  std::variant<Zero, Builtin> kind_;
};

struct Graphex {
  double isolatedRate = 0.0;
  StarSpec star;
  GraphonSpec graphon;

  bool nontrivial() const;
  friend bool operator==(const Graphex&, const Graphex&) = default;
};

double evalGraphon(const GraphonSpec& spec, double x, double y);
double graphonL1(const GraphonSpec& spec);

}  // namespace graphex
