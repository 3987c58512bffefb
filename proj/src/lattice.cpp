#include "elliptica/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>

#include "elliptica/compensated.hpp"
#include "elliptica/linalg.hpp"
#include "precision.hpp"

namespace elliptica {

namespace {

void check_point(const LatticePoint& p) {
  check_coordinate(p.x, "x");
  check_coordinate(p.y, "y");
}

void check_enumeration_size(LatticePoint u, LatticePoint v) {
  const long steps = (v.x - u.x) + (v.y - u.y);
  if (steps > kMaxEnumerationSteps) {
    throw ScaleError("path enumeration limited to " + std::to_string(kMaxEnumerationSteps) +
                     " steps, got " + std::to_string(steps));
  }
}

bool reachable(LatticePoint u, LatticePoint v) { return v.x >= u.x && v.y >= u.y; }

void enumerate_into(LatticePoint at, LatticePoint v, std::vector<Step>& prefix,
                    LatticePoint start, std::vector<LatticePath>& out) {
  if (at == v) {
    out.emplace_back(start, prefix);
    return;
  }
  if (at.x < v.x) {
    prefix.push_back(Step::East);
    enumerate_into({at.x + 1, at.y}, v, prefix, start, out);
    prefix.pop_back();
  }
  if (at.y < v.y) {
    prefix.push_back(Step::North);
    enumerate_into({at.x, at.y + 1}, v, prefix, start, out);
    prefix.pop_back();
  }
}

/// Vertex set of a path as a bitset over a shared bounding box.
class PointMask {
 public:
  PointMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const PointMask& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <typename T>
struct Strand {
  std::vector<PointMask> masks;
  std::vector<Complex<T>> weights;
};

}  // namespace

LatticePath::LatticePath(LatticePoint start, std::vector<Step> steps)
    : start_(start), steps_(std::move(steps)) {
  check_point(start_);
  check_point(end());
}

LatticePoint LatticePath::end() const {
  LatticePoint p = start_;
  for (Step s : steps_) (s == Step::East ? p.x : p.y) += 1;
  return p;
}

std::vector<LatticePoint> LatticePath::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(steps_.size() + 1);
  LatticePoint p = start_;
  pts.push_back(p);
  for (Step s : steps_) {
    (s == Step::East ? p.x : p.y) += 1;
    pts.push_back(p);
  }
  return pts;
}

std::string LatticePath::to_string() const {
  std::string out = "(" + std::to_string(start_.x) + "," + std::to_string(start_.y) + "):";
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

const char* configuration_name(Configuration c) {
  switch (c) {
    case Configuration::antidiagonal: return "antidiagonal";
    case Configuration::horizontal: return "horizontal";
    case Configuration::vertical: return "vertical";
    case Configuration::general: return "general";
  }
  return "general";
}

PointTuple::PointTuple(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("point tuple must be nonempty");
  for (const auto& p : points_) check_point(p);
  if (points_.size() == 1) {
    configuration_ = Configuration::antidiagonal;
    return;
  }
  bool anti = true, horiz = true, vert = true;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& a = points_[i - 1];
    const auto& b = points_[i];
    anti = anti && b.x > a.x && b.x + b.y == a.x + a.y;
    horiz = horiz && b.x > a.x && b.y == a.y;
    vert = vert && b.x == a.x && b.y < a.y;
  }
  configuration_ = anti    ? Configuration::antidiagonal
                   : horiz ? Configuration::horizontal
                   : vert  ? Configuration::vertical
                           : Configuration::general;
}

bool PointTuple::consecutive() const {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const long dx = points_[i].x - points_[i - 1].x;
    const long dy = points_[i].y - points_[i - 1].y;
    switch (configuration_) {
      case Configuration::antidiagonal:
      case Configuration::horizontal:
        if (dx != 1) return false;
        break;
      case Configuration::vertical:
        if (dy != -1) return false;
        break;
      case Configuration::general:
        return false;
    }
  }
  return true;
}

std::vector<LatticePath> enumerate_paths(LatticePoint u, LatticePoint v) {
  check_point(u);
  check_point(v);
  std::vector<LatticePath> out;
  if (!reachable(u, v)) return out;
  check_enumeration_size(u, v);
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>((v.x - u.x) + (v.y - u.y)));
  enumerate_into(u, v, prefix, u, out);
  return out;
}

template <typename T>
Complex<T> path_weight(const LatticePath& path, const EllipticParams<T>& params,
                       const ThetaContext<T>& ctx) {
  Complex<T> w{1};
  LatticePoint p = path.start();
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++p.x;
      w *= weight(p.x, p.y, params, ctx);
    } else {
      ++p.y;
    }
  }
  return w;
}

namespace {

template <typename T>
void brute_sum(LatticePoint at, LatticePoint v, Complex<T> acc, const WeightGrid<T>& grid,
               CompensatedSum<T>& sum) {
  if (at == v) {
    sum.add(acc);
    return;
  }
  if (at.x < v.x) brute_sum<T>({at.x + 1, at.y}, v, acc * grid.at(at.x + 1, at.y), grid, sum);
  if (at.y < v.y) brute_sum<T>({at.x, at.y + 1}, v, acc, grid, sum);
}

}  // namespace

template <typename T>
Complex<T> gf_bruteforce(LatticePoint u, LatticePoint v, const EllipticParams<T>& params,
                         const ThetaContext<T>& ctx, T* max_term) {
  check_point(u);
  check_point(v);
  if (!reachable(u, v)) return Complex<T>{};
  check_enumeration_size(u, v);
  return gf_bruteforce(u, v, WeightGrid<T>(u, v, params, ctx), max_term);
}

template <typename T>
Complex<T> gf_bruteforce(LatticePoint u, LatticePoint v, const WeightGrid<T>& grid, T* max_term) {
  if (!reachable(u, v)) return Complex<T>{};
  check_enumeration_size(u, v);
  if (u.x < v.x && !(grid.covers({u.x + 1, u.y}) && grid.covers({v.x, v.y}))) {
    throw DomainError("weight grid does not cover the path rectangle");
  }
  CompensatedSum<T> sum;
  brute_sum<T>(u, v, Complex<T>{1}, grid, sum);
  if (max_term) *max_term = sum.max_term();
  return sum.value();
}

template <typename T>
Complex<T> gf_recursive(long l, long k, long n, long m, const EllipticParams<T>& params,
                        const ThetaContext<T>& ctx) {
  check_point({l, k});
  check_point({n, m});
  if (n < l || m < k) return Complex<T>{};
  const long width = n - l + 1;
  const long height = m - k + 1;
  if (width * height > kMaxMemoCells) {
    throw ScaleError("recursive evaluation limited to " + std::to_string(kMaxMemoCells) + " cells");
  }
  // column-by-column: g[x][y] = g[x][y-1] + g[x-1][y] * w(x, y)
  std::vector<Complex<T>> column(static_cast<std::size_t>(height), Complex<T>{1});
  for (long x = l + 1; x <= n; ++x) {
    for (long j = 0; j < height; ++j) {
      const long y = k + j;
      Complex<T> from_left = column[j] * weight(x, y, params, ctx);
      column[j] = j == 0 ? from_left : column[j - 1] + from_left;
    }
  }
  return column.back();
}

template <typename T>
Complex<T> enumerate_nonintersecting(const PointTuple& starts, const PointTuple& ends,
                                     const EllipticParams<T>& params, const ThetaContext<T>& ctx) {
  const std::size_t r = starts.size();
  if (ends.size() != r) throw DomainError("start and end tuples differ in length");
  if (r > kMaxFamilyStrands) {
    throw ScaleError("nonintersecting enumeration limited to r <= 3");
  }
  long x0 = starts[0].x, y0 = starts[0].y, x1 = x0, y1 = y0;
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& p : {starts[i], ends[i]}) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  }
  const long w = x1 - x0 + 1;
  const std::size_t bits = static_cast<std::size_t>(w * (y1 - y0 + 1));

  std::vector<Strand<T>> strands(r);
  double combos = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const auto paths = enumerate_paths(starts[i], ends[i]);
    if (paths.empty()) return Complex<T>{};
    combos *= static_cast<double>(paths.size());
    for (const auto& path : paths) {
      PointMask mask(bits);
      for (const auto& pt : path.points()) mask.set(static_cast<std::size_t>((pt.y - y0) * w + (pt.x - x0)));
      strands[i].masks.push_back(std::move(mask));
      strands[i].weights.push_back(path_weight(path, params, ctx));
    }
  }
  if (combos > 5e7) throw ScaleError("nonintersecting enumeration too large");

  CompensatedSum<T> sum;
  std::vector<const PointMask*> chosen(r, nullptr);
  auto recurse = [&](auto&& self, std::size_t level, Complex<T> acc) -> void {
    if (level == r) {
      sum.add(acc);
      return;
    }
    const auto& strand = strands[level];
    for (std::size_t p = 0; p < strand.masks.size(); ++p) {
      bool clash = false;
      for (std::size_t prev = 0; prev < level && !clash; ++prev) {
        clash = strand.masks[p].intersects(*chosen[prev]);
      }
      if (clash) continue;
      chosen[level] = &strand.masks[p];
      self(self, level + 1, acc * strand.weights[p]);
    }
  };
  recurse(recurse, 0, Complex<T>{1});
  return sum.value();
}

bool structurally_compatible(const PointTuple& starts, const PointTuple& ends) {
  return starts.size() == ends.size() && starts.configuration() != Configuration::general &&
         ends.configuration() != Configuration::general;
}

template <typename T>
Complex<T> lgv_determinant(const PointTuple& starts, const PointTuple& ends,
                           const EllipticParams<T>& params, const ThetaContext<T>& ctx,
                           bool assume_compatible) {
  const std::size_t r = starts.size();
  if (ends.size() != r) throw DomainError("start and end tuples differ in length");
  if (!assume_compatible && !structurally_compatible(starts, ends)) {
    throw DomainError(std::string("cannot certify compatibility of ") +
                      configuration_name(starts.configuration()) + " starts with " +
                      configuration_name(ends.configuration()) +
                      " ends; assert it explicitly for general tuples");
  }
  SquareMatrix<T> mat(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      mat(i, j) = gf_recursive(starts[j].x, starts[j].y, ends[i].x, ends[i].y, params, ctx);
    }
  }
  return determinant(std::move(mat));
}

template <typename T>
StartReduction<T> reduce_horizontal_starts(const PointTuple& starts) {
  const long r = static_cast<long>(starts.size());
  if (r > 1 && (starts.configuration() != Configuration::horizontal || !starts.consecutive())) {
    throw DomainError("expected consecutive starts (l+j, k) on a horizontal line");
  }
  const long l = starts[0].x - 1;
  const long k = starts[0].y;
  std::vector<LatticePoint> pts;
  for (long j = 1; j <= r; ++j) pts.push_back({l + j, k + r - j});
  return {PointTuple(std::move(pts)), Complex<T>{1}};
}

template <typename T>
StartReduction<T> reduce_vertical_starts(const PointTuple& starts, const EllipticParams<T>& params,
                                         const ThetaContext<T>& ctx) {
  const long r = static_cast<long>(starts.size());
  if (r > 1 && (starts.configuration() != Configuration::vertical || !starts.consecutive())) {
    throw DomainError("expected consecutive starts (l, k-j) on a vertical line");
  }
  const long l = starts[0].x;
  const long k = starts[0].y + 1;
  std::vector<LatticePoint> pts;
  Complex<T> prefactor{1};
  for (long j = 1; j <= r; ++j) {
    pts.push_back({l + j - 1, k - j});
    for (long i = 1; i < j; ++i) prefactor *= weight(l + i, k - j, params, ctx);
  }
  return {PointTuple(std::move(pts)), prefactor};
}

#define ELLIPTICA_INSTANTIATE(T)                                                                   \
  template Complex<T> path_weight<T>(const LatticePath&, const EllipticParams<T>&,                 \
                                     const ThetaContext<T>&);                                      \
  template Complex<T> gf_bruteforce<T>(LatticePoint, LatticePoint, const EllipticParams<T>&,       \
                                       const ThetaContext<T>&, T*);                                \
  template Complex<T> gf_bruteforce<T>(LatticePoint, LatticePoint, const WeightGrid<T>&, T*);      \
  template Complex<T> gf_recursive<T>(long, long, long, long, const EllipticParams<T>&,            \
                                      const ThetaContext<T>&);                                     \
  template Complex<T> enumerate_nonintersecting<T>(const PointTuple&, const PointTuple&,           \
                                                   const EllipticParams<T>&,                       \
                                                   const ThetaContext<T>&);                        \
  template Complex<T> lgv_determinant<T>(const PointTuple&, const PointTuple&,                     \
                                         const EllipticParams<T>&, const ThetaContext<T>&, bool);  \
  template StartReduction<T> reduce_horizontal_starts<T>(const PointTuple&);                       \
  template StartReduction<T> reduce_vertical_starts<T>(const PointTuple&, const EllipticParams<T>&, \
                                                       const ThetaContext<T>&);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)
ELLIPTICA_INSTANTIATE(Wide)

}  // namespace elliptica
