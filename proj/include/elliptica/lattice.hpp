#pragma once

#include <compare>
#include <string>
#include <vector>

#include "elliptica/weight.hpp"

namespace elliptica {

struct LatticePoint {
  long x = 0;
  long y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Step : char { East = 'E', North = 'N' };

/// A monotone path: unit East/North steps from a start point.
class LatticePath {
 public:
  LatticePath(LatticePoint start, std::vector<Step> steps);

  const LatticePoint& start() const noexcept { return start_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  LatticePoint end() const;
  /// Every lattice point visited, start and end included.
  std::vector<LatticePoint> points() const;
  /// "(x,y):ENEN"
  std::string to_string() const;

 private:
  LatticePoint start_;
  std::vector<Step> steps_;
};

enum class Configuration { antidiagonal, horizontal, vertical, general };

const char* configuration_name(Configuration c);

/// Start or end points of a path family. The configuration is detected from
/// the points: antidiagonal (x+y fixed, x increasing), horizontal (y fixed,
/// x increasing), vertical (x fixed, y decreasing), otherwise general.
class PointTuple {
 public:
  explicit PointTuple(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  Configuration configuration() const noexcept { return configuration_; }
  /// Points sit at unit spacing along their line.
  bool consecutive() const;

 private:
  std::vector<LatticePoint> points_;
  Configuration configuration_;
};

inline constexpr long kMaxEnumerationSteps = 24;
inline constexpr std::size_t kMaxFamilyStrands = 3;
inline constexpr long kMaxMemoCells = 1000000;

/// All monotone paths u -> v in lexicographic step order (E before N).
std::vector<LatticePath> enumerate_paths(LatticePoint u, LatticePoint v);

/// Product of weight(x, y) over the East steps (x-1, y) -> (x, y).
template <typename T>
Complex<T> path_weight(const LatticePath& path, const EllipticParams<T>& params,
                       const ThetaContext<T>& ctx);

/// weight(x, y) tabulated over the East-step targets of the rectangle u -> v,
/// i.e. u.x < x <= v.x and u.y <= y <= v.y.
template <typename T>
class WeightGrid {
 public:
  WeightGrid(LatticePoint u, LatticePoint v, const EllipticParams<T>& params, const ThetaContext<T>& ctx)
      : x0_(u.x + 1), y0_(u.y), width_(v.x - u.x), height_(v.y - u.y + 1) {
    cells_.reserve(static_cast<std::size_t>(width_ * height_));
    for (long x = x0_; x < x0_ + width_; ++x) {
      for (long y = y0_; y < y0_ + height_; ++y) cells_.push_back(weight(x, y, params, ctx));
    }
  }

  bool covers(LatticePoint at) const {
    return at.x >= x0_ && at.x < x0_ + width_ && at.y >= y0_ && at.y < y0_ + height_;
  }

  const Complex<T>& at(long x, long y) const {
    return cells_[static_cast<std::size_t>((x - x0_) * height_ + (y - y0_))];
  }

 private:
  long x0_, y0_, width_, height_;
  std::vector<Complex<T>> cells_;
};

/// Weighted path count by explicit enumeration of every path. `max_term`
/// receives the largest single path weight magnitude.
template <typename T>
Complex<T> gf_bruteforce(LatticePoint u, LatticePoint v, const EllipticParams<T>& params,
                         const ThetaContext<T>& ctx, T* max_term = nullptr);

/// Enumeration against precomputed weights; the grid must cover u -> v.
template <typename T>
Complex<T> gf_bruteforce(LatticePoint u, LatticePoint v, const WeightGrid<T>& grid, T* max_term = nullptr);

/// Weighted path count by the last-step recursion over the rectangle.
template <typename T>
Complex<T> gf_recursive(long l, long k, long n, long m, const EllipticParams<T>& params,
                        const ThetaContext<T>& ctx);

/// Sum over vertex-disjoint families with strand i running starts[i] -> ends[i].
template <typename T>
Complex<T> enumerate_nonintersecting(const PointTuple& starts, const PointTuple& ends,
                                     const EllipticParams<T>& params, const ThetaContext<T>& ctx);

/// Both tuples use a named configuration, which makes the identity the only
/// permutation admitting nonintersecting families.
bool structurally_compatible(const PointTuple& starts, const PointTuple& ends);

/// det_{i,j} gf(starts[j] -> ends[i]). General configurations need
/// assume_compatible; named ones are checked.
template <typename T>
Complex<T> lgv_determinant(const PointTuple& starts, const PointTuple& ends,
                           const EllipticParams<T>& params, const ThetaContext<T>& ctx,
                           bool assume_compatible = false);

template <typename T>
struct StartReduction {
  PointTuple starts;
  Complex<T> prefactor;
};

/// Consecutive horizontal starts (l+j, k), j = 1..r, give the same
/// determinant as the antidiagonal starts (l+j, k+r-j); prefactor 1.
template <typename T>
StartReduction<T> reduce_horizontal_starts(const PointTuple& starts);

/// Consecutive vertical starts (l, k-j) reduce to (l+j-1, k-j) with
/// prefactor prod_{1<=i<j<=r} w(l+i, k-j).
template <typename T>
StartReduction<T> reduce_vertical_starts(const PointTuple& starts, const EllipticParams<T>& params,
                                         const ThetaContext<T>& ctx);

}  // namespace elliptica
