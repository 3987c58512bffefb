#include "elliptica/lattice.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace elliptica;
using test::context;

namespace {

const EllipticParams<double> kShared{{0.9, 0.2}, {1.3, -0.4}, {0.85, 0.1}};
const cplx kSharedNome{0.15, 0.05};

}  // namespace

TEST_CASE("path enumeration") {
  const auto single = enumerate_paths({2, 3}, {2, 3});
  REQUIRE(single.size() == 1);
  CHECK(single[0].steps().empty());
  const auto square = enumerate_paths({0, 0}, {2, 2});
  CHECK(square.size() == 6);
  CHECK(square.front().to_string() == "(0,0):EENN");
  CHECK(square.back().to_string() == "(0,0):NNEE");
  CHECK(enumerate_paths({0, 0}, {3, 2}).size() == 10);
  CHECK(enumerate_paths({0, 0}, {-1, 2}).empty());
  CHECK_THROWS_AS(enumerate_paths({0, 0}, {13, 13}), ScaleError);
}

TEST_CASE("path geometry") {
  const LatticePath path({1, -1}, {Step::North, Step::East, Step::East});
  CHECK(path.end() == LatticePoint{3, 0});
  CHECK(path.points().size() == 4);
  CHECK(path.to_string() == "(1,-1):NEE");
}

TEST_CASE("path weights") {
  const EllipticParams<double> params{{0.8, 0.3}, {1.2, -0.1}, {0.95, 0.05}};
  const auto ctx = context(0.1);
  CHECK(path_weight(LatticePath({0, 0}, {Step::North, Step::North}), params, ctx) == cplx{1});
  CHECK(path_weight(LatticePath({2, 3}, {Step::East}), params, ctx) == weight(3, 3, params, ctx));
  const LatticePath staircase({0, 0}, {Step::North, Step::East, Step::North, Step::East});
  CHECK_CLOSE(path_weight(staircase, params, ctx), oracle::staircase_weight, 1e-13);
}

TEST_CASE("brute-force generating function") {
  const auto ctx = context(kSharedNome);
  CHECK(gf_bruteforce({1, 1}, {1, 1}, kShared, ctx) == cplx{1});
  CHECK(gf_bruteforce({0, 3}, {2, 1}, kShared, ctx) == cplx{0});
  const EllipticParams<double> basic{0, 0, 0.5, Degeneration::ab_zero};
  CHECK_CLOSE(gf_bruteforce({0, 0}, {2, 2}, basic, context(0.0)), cplx{oracle::q_area_sum_2_2_half}, 1e-15);
  double max_term = 0;
  CHECK_CLOSE(gf_bruteforce({-1, 1}, {2, 4}, kShared, ctx, &max_term), oracle::gf_m1_1_to_2_4, 1e-12);
  CHECK(max_term > 0);
}

TEST_CASE("weight grid enumeration matches direct enumeration") {
  const auto ctx = context(kSharedNome);
  const WeightGrid<double> grid({-2, -2}, {3, 4}, kShared, ctx);
  CHECK(grid.covers({3, 4}));
  CHECK_FALSE(grid.covers({-2, 0}));
  CHECK_CLOSE(gf_bruteforce({-1, 1}, {2, 4}, grid), gf_bruteforce({-1, 1}, {2, 4}, kShared, ctx), 1e-15);
  CHECK_THROWS_AS(gf_bruteforce({-1, 1}, {4, 4}, grid), DomainError);
}

TEST_CASE("recursive generating function") {
  const auto ctx = context(kSharedNome);
  CHECK_CLOSE(gf_recursive(-1, 1, 2, 4, kShared, ctx), oracle::gf_m1_1_to_2_4, 1e-12);
  CHECK(gf_recursive(0, 3, 2, 1, kShared, ctx) == cplx{0});
}

TEST_CASE("nonintersecting families") {
  const auto ctx = context(kSharedNome);
  const PointTuple starts({{1, 1}, {2, 0}});
  const PointTuple ends({{4, 3}, {4, 2}});
  CHECK(starts.configuration() == Configuration::antidiagonal);
  CHECK(ends.configuration() == Configuration::vertical);
  CHECK_CLOSE(enumerate_nonintersecting(starts, ends, kShared, ctx), oracle::nonint_r2, 1e-12);
  CHECK_CLOSE(lgv_determinant(starts, ends, kShared, ctx), oracle::nonint_r2, 1e-10);

  const PointTuple one_start({{1, 1}});
  const PointTuple one_end({{4, 3}});
  CHECK_CLOSE(enumerate_nonintersecting(one_start, one_end, kShared, ctx),
              gf_bruteforce({1, 1}, {4, 3}, kShared, ctx), 1e-15);
  CHECK_CLOSE(lgv_determinant(one_start, one_end, kShared, ctx), gf_bruteforce({1, 1}, {4, 3}, kShared, ctx),
              1e-12);
}

TEST_CASE("reversed end tuple") {
  const auto ctx = context(kSharedNome);
  const PointTuple starts({{1, 1}, {2, 0}});
  const PointTuple ends({{4, 3}, {4, 2}});
  const PointTuple reversed({{4, 2}, {4, 3}});
  CHECK(enumerate_nonintersecting(starts, reversed, kShared, ctx) == cplx{0});
  CHECK_FALSE(structurally_compatible(starts, reversed));
  CHECK_THROWS_AS(lgv_determinant(starts, reversed, kShared, ctx), DomainError);
  CHECK_CLOSE(lgv_determinant(starts, reversed, kShared, ctx, true), -lgv_determinant(starts, ends, kShared, ctx),
              1e-14);
}

TEST_CASE("start reductions") {
  const auto ctx = context(kSharedNome);
  const PointTuple ends({{5, 3}, {5, 2}});

  const PointTuple horizontal({{1, 0}, {2, 0}});
  const auto h = reduce_horizontal_starts<double>(horizontal);
  CHECK(h.starts.points() == std::vector<LatticePoint>{{1, 1}, {2, 0}});
  CHECK(h.prefactor == cplx{1});
  CHECK_CLOSE(lgv_determinant(horizontal, ends, kShared, ctx), lgv_determinant(h.starts, ends, kShared, ctx), 1e-11);

  const PointTuple vertical({{0, 2}, {0, 1}});
  const auto v = reduce_vertical_starts(vertical, kShared, ctx);
  CHECK(v.starts.points() == std::vector<LatticePoint>{{0, 2}, {1, 1}});
  CHECK_CLOSE(v.prefactor, weight(1, 1, kShared, ctx), 1e-15);
  CHECK_CLOSE(lgv_determinant(vertical, ends, kShared, ctx),
              v.prefactor * lgv_determinant(v.starts, ends, kShared, ctx), 1e-11);

  const PointTuple single({{0, 2}});
  CHECK(reduce_vertical_starts(single, kShared, ctx).prefactor == cplx{1});
  CHECK(reduce_horizontal_starts<double>(single).starts.points() == single.points());
}
